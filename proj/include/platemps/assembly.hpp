#pragma once

#include <Eigen/Dense>

#include "platemps/basis.hpp"
#include "platemps/boundary.hpp"
#include "platemps/geometry.hpp"

namespace platemps {

/// Hermitian Gram pair: F discretizes the boundary tension quadratic form
/// (F = B^H B), G the interior L2 form estimated by Monte-Carlo
/// (G = cell_weight A^H A with A the basis values at interior points).
struct GramPair {
  Eigen::MatrixXcd F;
  Eigen::MatrixXcd G;
  double k = 0.0;  // scan wavenumber these were built at
};

GramPair assemble(const BasisSet& basis, const std::vector<BoundarySample>& boundary,
                  const InteriorSampleSet& interior, const PlateMaterial& material);

/// G alone, for tests that probe the Monte-Carlo estimate directly.
Eigen::MatrixXcd interior_gram(const BasisSet& basis, const InteriorSampleSet& interior);

}  // namespace platemps
