#include "platemps/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace platemps {

namespace {

constexpr int kMaxOrder = 200;
constexpr double kMaxArg = 1e4;

void check_range(int n, double z) {
  if (n > kMaxOrder) throw std::domain_error("bessel order above configured limit 200");
  if (!(z >= 0.0) || z > kMaxArg)
    throw std::domain_error("bessel argument outside configured range [0, 1e4]");
}

// Start order for the downward recurrence. The backward error decays like
// (z / 2m)^(2(M-m)) once m > z, so a fixed margin above max(n, z) is ample
// for double precision (cf. Abramowitz & Stegun 9.12, Miller's method).
int start_order(int nmax, double z) {
  const double base = std::max(static_cast<double>(nmax), z);
  int m = static_cast<int>(base + 1.5 * std::sqrt(base + 1.0)) + 40;
  return m + (m & 1);  // even, so the J normalization sum ends cleanly
}

}  // namespace

std::vector<double> bessel_j_array(int nmax, double z) {
  check_range(nmax, z);
  std::vector<double> out(nmax + 1, 0.0);
  if (z == 0.0) {
    out[0] = 1.0;
    return out;
  }
  const int m0 = start_order(nmax, z);
  double jp = 0.0;           // J~_{m+1}
  double jc = 1e-300;        // J~_m seed
  double sum = 0.0;          // J~_0 + 2 sum_{k>=1} J~_{2k}
  for (int m = m0; m >= 1; --m) {
    const double jm = 2.0 * m / z * jc - jp;
    jp = jc;
    jc = jm;
    if ((m - 1) % 2 == 0) sum += (m - 1 == 0) ? jc : 2.0 * jc;
    if (m - 1 <= nmax) out[m - 1] = jc;
    if (std::abs(jc) > 1e280) {  // rescale to avoid overflow of the unnormalized pass
      jc *= 1e-280;
      jp *= 1e-280;
      sum *= 1e-280;
      for (double& v : out) v *= 1e-280;
    }
  }
  for (double& v : out) v /= sum;
  return out;
}

std::vector<double> bessel_i_scaled_array(int nmax, double z) {
  check_range(nmax, z);
  std::vector<double> out(nmax + 1, 0.0);
  if (z == 0.0) {
    out[0] = 1.0;
    return out;
  }
  const int m0 = start_order(nmax, z);
  double ip = 0.0;
  double ic = 1e-300;
  double sum = 0.0;  // I~_0 + 2 sum_{k>=1} I~_k = e^z, so scaled values sum to 1
  for (int m = m0; m >= 1; --m) {
    const double im = 2.0 * m / z * ic + ip;
    ip = ic;
    ic = im;
    sum += (m - 1 == 0) ? ic : 2.0 * ic;
    if (m - 1 <= nmax) out[m - 1] = ic;
    if (std::abs(ic) > 1e280) {
      ic *= 1e-280;
      ip *= 1e-280;
      sum *= 1e-280;
      for (double& v : out) v *= 1e-280;
    }
  }
  for (double& v : out) v /= sum;
  return out;
}

double bessel_j(int n, double z) {
  const int a = std::abs(n);
  const double v = bessel_j_array(a, z)[a];
  return (n < 0 && (a & 1)) ? -v : v;
}

double bessel_i_scaled(int n, double z) {
  const int a = std::abs(n);
  return bessel_i_scaled_array(a, z)[a];
}

double bessel_i(int n, double z) { return bessel_i_scaled(n, z) * std::exp(z); }

}  // namespace platemps
