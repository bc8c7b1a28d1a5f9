#pragma once

#include <Eigen/Dense>

#include "platemps/assembly.hpp"

namespace platemps {

/// The m smallest generalized eigenvalues of F u = tau G u on the subspace
/// where G is numerically definite, with G-orthonormal eigenvectors.
struct TensionSolution {
  Eigen::VectorXd taus;        // ascending, size m
  Eigen::MatrixXcd vectors;    // basis_count x m, u_i^H G u_j = delta_ij
  int retained_dim = 0;        // dimension kept after regularizing G
  double g_condition = 0.0;    // largest / smallest retained eigenvalue of G
};

/// Regularizes by spectral truncation of G (drop eigenvalues below
/// reg_eps * max), whitens, and solves the reduced Hermitian problem.
TensionSolution smallest_tensions(const GramPair& pair, int m, double reg_eps = 1e-12);

}  // namespace platemps
