#pragma once

#include <vector>

namespace platemps {

// First-kind and modified Bessel functions of integer order, by downward
// (Miller) recurrence. Accuracy target is ~1e-13 relative over the
// configured range; orders up to 200 and arguments up to 1e4.

/// J_0..J_nmax at z >= 0, normalized with J_0 + 2 sum J_2k = 1.
std::vector<double> bessel_j_array(int nmax, double z);

/// e^{-z} I_0..I_nmax at z >= 0, normalized with I_0 + 2 sum I_k = e^z.
std::vector<double> bessel_i_scaled_array(int nmax, double z);

double bessel_j(int n, double z);   // J_{-n} = (-1)^n J_n
double bessel_i(int n, double z);   // I_{-n} = I_n; overflows to inf for z > ~709
double bessel_i_scaled(int n, double z);

}  // namespace platemps
