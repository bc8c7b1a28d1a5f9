#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "platemps/bessel.hpp"

using namespace platemps;

namespace {

// 40-term ascending series, the reference the recurrences are checked against
double j_series(int n, double z) {
  double term = 1.0;
  for (int i = 1; i <= n; ++i) term *= 0.5 * z / i;
  double sum = term;
  const double q = 0.25 * z * z;
  for (int m = 1; m <= 40; ++m) {
    term *= -q / (m * (m + n));
    sum += term;
  }
  return sum;
}

double i_series(int n, double z, int terms = 40) {
  double term = 1.0;
  for (int i = 1; i <= n; ++i) term *= 0.5 * z / i;
  double sum = term;
  const double q = 0.25 * z * z;
  for (int m = 1; m <= terms; ++m) {
    term *= q / (m * (m + n));
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("values at zero argument") {
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(1, 0.0) == 0.0);
  CHECK(bessel_j(5, 0.0) == 0.0);
  CHECK(bessel_i(0, 0.0) == 1.0);
  CHECK(bessel_i(3, 0.0) == 0.0);
}

TEST_CASE("first zero of J0 located by a series bisection oracle") {
  double a = 2.0, b = 3.0;
  REQUIRE(j_series(0, a) > 0.0);
  REQUIRE(j_series(0, b) < 0.0);
  while (b - a > 1e-14) {
    const double m = 0.5 * (a + b);
    (j_series(0, a) * j_series(0, m) <= 0.0 ? b : a) = m;
  }
  const double root = 0.5 * (a + b);
  CHECK(root == doctest::Approx(2.404825557695773).epsilon(1e-12));
  CHECK(std::abs(bessel_j(0, root)) < 1e-10);
}

TEST_CASE("I1(1) against a 30-term series") {
  const double ref = i_series(1, 1.0, 30);
  CHECK(ref == doctest::Approx(0.565159103992485).epsilon(1e-13));
  CHECK(bessel_i(1, 1.0) == doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("recurrence values track the power series for z <= 10, n <= 10") {
  for (int n = 0; n <= 10; ++n)
    for (double z : {0.1, 0.5, 1.0, 2.0, 3.7, 5.0, 7.3, 10.0}) {
      const double js = j_series(n, z);
      if (std::abs(js) > 1e-280) CHECK(bessel_j(n, z) == doctest::Approx(js).epsilon(1e-10));
      const double is = i_series(n, z);
      CHECK(bessel_i(n, z) == doctest::Approx(is).epsilon(1e-10));
    }
}

TEST_CASE("negative orders by symmetry") {
  CHECK(bessel_j(-3, 2.5) == doctest::Approx(-bessel_j(3, 2.5)).epsilon(1e-14));
  CHECK(bessel_j(-4, 2.5) == doctest::Approx(bessel_j(4, 2.5)).epsilon(1e-14));
  CHECK(bessel_i(-5, 2.5) == doctest::Approx(bessel_i(5, 2.5)).epsilon(1e-14));
}

TEST_CASE("scaled I stays bounded where the raw value overflows") {
  CHECK(bessel_i_scaled(0, 800.0) > 0.0);
  CHECK(bessel_i_scaled(0, 800.0) < 1.0);
  CHECK(std::isinf(bessel_i(0, 800.0)));
}

TEST_CASE("arguments outside the configured range are rejected") {
  CHECK_THROWS_AS(bessel_j(201, 1.0), std::domain_error);
  CHECK_THROWS_AS(bessel_j(0, 1.5e4), std::domain_error);
  CHECK_THROWS_AS(bessel_j(0, -1.0), std::domain_error);
  CHECK_THROWS_AS(bessel_i(201, 1.0), std::domain_error);
}
