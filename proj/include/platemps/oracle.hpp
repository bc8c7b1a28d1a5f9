#pragma once

#include <utility>
#include <vector>

#include "platemps/geometry.hpp"

namespace platemps {

/// Characteristic determinant for circular plates: the 2x2 boundary matrix
/// whose columns are the J_n(k r) and I_n(k r) radial families, with rows
/// given by the two bc residual quantities. Built from the same boundary
/// operators as the solver, so roots cross-validate that implementation.
struct DiskCharacteristic {
  BcTag bc = BcTag::Clamped;
  double nu = 0.33;
  double radius = 1.0;
  int n = 0;  // angular order

  double operator()(double k) const;
};

struct DiskRoot {
  double k = 0.0;
  int n = 0;
  int multiplicity = 1;  // 1 for n = 0, else 2
};

/// All characteristic roots for n = 0..n_max, k in (0.1, k_max], bracketed on
/// a 1e-3 grid and bisected to 1e-10, sorted by k.
std::vector<DiskRoot> disk_eigenvalues(BcTag bc, double nu, double radius, int n_max,
                                       double k_max);

/// Nullspace (a_J, a_I) of the boundary matrix at a characteristic root,
/// normalized to unit euclidean norm. Throws if k is not a root.
std::pair<double, double> disk_mode_coefficients(BcTag bc, double nu, double k_root, int n,
                                                 double radius = 1.0);

}  // namespace platemps
