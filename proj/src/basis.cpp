#include "platemps/basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "platemps/bessel.hpp"

namespace platemps {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// z^n for small non-negative n; std::pow(complex, int) is not reliable for
// z = 0, n = 0 across standard libraries
cd cpow_int(cd z, int n) {
  cd r{1.0, 0.0};
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

// Wirtinger ladder: with d+ = dx + i dy and d- = dx - i dy acting on
// b_n = J_n(kr) e^{in theta},
//   d- b_n = k b_{n-1},   d+ b_n = -k b_{n+1},
// and on the modified family i_n = I_n(kr) e^{in theta},
//   d- i_n = k i_{n-1},   d+ i_n = +k i_{n+1}.
// Expanding dx^a dy^b = ((d+ + d-)/2)^a ((d+ - d-)/(2i))^b binomially gives
//   dx^a dy^b f_n = k^(a+b) sum_p lad(a,b,p) s^p f_{n+2p-(a+b)}
// with s = -1 (J) or +1 (I). lad(a,b,p) collects the binomial weights.
std::vector<cd> ladder_coeffs(int a, int b) {
  std::vector<cd> lad(a + b + 1, cd{0.0, 0.0});
  const cd pref = cpow_int(cd{0.5, 0.0}, a) * cpow_int(cd{0.0, -0.5}, b);
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= b; ++j) {
      const double sgn = ((b - j) % 2 == 0) ? 1.0 : -1.0;
      lad[i + j] += pref * binom(a, i) * binom(b, j) * sgn;
    }
  return lad;
}

const std::vector<cd>& ladder(int a, int b) {
  static const auto table = [] {
    std::vector<std::vector<cd>> t;
    for (int o = 0; o <= 4; ++o)
      for (int bb = 0; bb <= o; ++bb) t.push_back(ladder_coeffs(o - bb, bb));
    return t;
  }();
  return table[EvalTable::index(a, b)];
}

int entries(int max_order) { return (max_order + 1) * (max_order + 2) / 2; }

}  // namespace

void PlateMaterial::validate() const {
  if (!(D > 0.0)) throw std::invalid_argument("material: D must be positive");
  if (!(rho > 0.0)) throw std::invalid_argument("material: rho must be positive");
  if (!(h > 0.0)) throw std::invalid_argument("material: h must be positive");
  if (!(T >= 0.0)) throw std::invalid_argument("material: T must be non-negative");
  if (!(nu >= 0.0 && nu < 0.5)) throw std::invalid_argument("material: nu must be in [0, 0.5)");
}

SplitWavenumbers split_wavenumbers(const PlateMaterial& material, double omega) {
  material.validate();
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  SplitWavenumbers s;
  s.omega = omega;
  const double rhw2 = material.rho_h() * omega * omega;
  const double disc = std::sqrt(material.T * material.T + 4.0 * material.D * rhw2);
  // larger-magnitude root first, the other from the product -rho h w^2 / D
  s.lambda1 = -(material.T + disc) / (2.0 * material.D);
  s.lambda2 = -rhw2 / (material.D * s.lambda1);
  s.k1 = std::sqrt(-s.lambda1);
  s.k2 = std::sqrt(s.lambda2);
  s.delta_lambda = disc / material.D;
  return s;
}

double omega_from_scan_k(const PlateMaterial& material, double k) {
  return k * k * std::sqrt(material.D / material.rho_h());
}

double BasisSet::normalizer(int f) const { return std::exp(log_normalizer[f]); }

BasisSet build_basis(BasisKind kind, const SplitWavenumbers& split, int count_osc, int count_eva,
                     const std::vector<BoundarySample>& boundary, double scan_k) {
  if (count_osc < 1 || count_eva < 1)
    throw std::invalid_argument("basis counts must be at least 1");
  if (boundary.empty()) throw std::invalid_argument("basis needs boundary samples");
  BasisSet b;
  b.kind = kind;
  b.scan_k = scan_k;
  b.k1 = split.k1;
  b.k2 = split.k2;
  if (kind == BasisKind::PlaneWave) {
    b.count_osc = count_osc;
    b.count_eva = count_eva;
    auto dirs = [](int n) {
      std::vector<Vec2> d(n);
      for (int j = 0; j < n; ++j) {
        const double a = 2.0 * std::numbers::pi * j / n;
        d[j] = {std::cos(a), std::sin(a)};
      }
      return d;
    };
    b.dir_osc = dirs(count_osc);
    b.dir_eva = dirs(count_eva);
    b.log_normalizer.assign(b.total(), 0.0);
    for (int j = 0; j < count_eva; ++j) {
      double m = -1e300;
      for (const BoundarySample& s : boundary) m = std::max(m, dot(b.dir_eva[j], s.point));
      b.log_normalizer[count_osc + j] = b.k2 * m;
    }
  } else {
    const int L = std::max(0, (count_osc - 1) / 2);
    b.order_max = L;
    b.count_osc = b.count_eva = 2 * L + 1;  // orders -L..L for both families
    b.log_normalizer.assign(b.total(), 0.0);
    for (int n = -L; n <= L; ++n) {
      double lm = -1e300;
      for (const BoundarySample& s : boundary) {
        const double z = b.k2 * std::hypot(s.point.x, s.point.y);
        const double v = bessel_i_scaled(n, z);
        if (v > 0.0) lm = std::max(lm, std::log(v) + z);
      }
      b.log_normalizer[b.count_osc + (n + L)] = lm;
    }
  }
  for (int f = 0; f < b.total(); ++f)
    if (!std::isfinite(b.log_normalizer[f]) || !std::isfinite(std::exp(b.log_normalizer[f])))
      throw std::runtime_error("overflow during normalizer computation for evanescent function #" +
                               std::to_string(f - b.count_osc) +
                               " (k2 too large for the domain scale)");
  return b;
}

EvalTable eval_basis(const BasisSet& basis, const std::vector<Vec2>& points, int max_order) {
  if (max_order < 0 || max_order > 4)
    throw std::invalid_argument("eval_basis supports derivative orders 0..4");
  const auto npts = static_cast<Eigen::Index>(points.size());
  const Eigen::Index ntot = basis.total();
  EvalTable table;
  table.max_order = max_order;
  table.d.assign(entries(max_order), Eigen::MatrixXcd(npts, ntot));

  if (basis.kind == BasisKind::PlaneWave) {
    const Eigen::Index no = basis.count_osc, ne = basis.count_eva;
    Eigen::MatrixXcd osc(npts, no), eva(npts, ne);
    for (Eigen::Index p = 0; p < npts; ++p) {
      for (Eigen::Index j = 0; j < no; ++j)
        osc(p, j) = std::exp(kI * (basis.k1 * dot(basis.dir_osc[j], points[p])));
      for (Eigen::Index j = 0; j < ne; ++j)
        eva(p, j) = std::exp(basis.k2 * dot(basis.dir_eva[j], points[p]) -
                             basis.log_normalizer[no + j]);
    }
    for (int a = 0; a + 0 <= max_order; ++a)
      for (int b = 0; a + b <= max_order; ++b) {
        Eigen::RowVectorXcd co(no), ce(ne);
        for (Eigen::Index j = 0; j < no; ++j)
          co(j) = cpow_int(kI * basis.k1 * basis.dir_osc[j].x, a) *
                  cpow_int(kI * basis.k1 * basis.dir_osc[j].y, b);
        for (Eigen::Index j = 0; j < ne; ++j)
          ce(j) = cpow_int(cd(basis.k2 * basis.dir_eva[j].x), a) *
                  cpow_int(cd(basis.k2 * basis.dir_eva[j].y), b);
        Eigen::MatrixXcd& m = table.deriv(a, b);
        m.leftCols(no) = osc.array().rowwise() * co.array();
        m.rightCols(ne) = eva.array().rowwise() * ce.array();
      }
  } else {
    const int L = basis.order_max;
    const int M = L + max_order;
    std::vector<cd> phase(M + 1);  // e^{i m theta}, m >= 0
    for (Eigen::Index p = 0; p < npts; ++p) {
      const double r = std::hypot(points[p].x, points[p].y);
      const double theta = std::atan2(points[p].y, points[p].x);
      const std::vector<double> J = bessel_j_array(M, basis.k1 * r);
      const std::vector<double> Is = bessel_i_scaled_array(M, basis.k2 * r);
      const double z2 = basis.k2 * r;
      for (int m = 0; m <= M; ++m) phase[m] = std::polar(1.0, m * theta);
      auto Jterm = [&](int m) -> cd {
        const int am = std::abs(m);
        const cd ph = m >= 0 ? phase[am] : std::conj(phase[am]);
        const double v = (m < 0 && (am & 1)) ? -J[am] : J[am];
        return v * ph;
      };
      auto Iterm = [&](int m) -> cd {
        const int am = std::abs(m);
        const cd ph = m >= 0 ? phase[am] : std::conj(phase[am]);
        return Is[am] * ph;
      };
      for (int n = -L; n <= L; ++n) {
        const int fo = n + L;
        const int fe = basis.count_osc + fo;
        const double escale = std::exp(z2 - basis.log_normalizer[fe]);
        for (int a = 0; a <= max_order; ++a)
          for (int b = 0; a + b <= max_order; ++b) {
            const int o = a + b;
            const auto& lad = ladder(a, b);
            cd vj{}, vi{};
            double sgn = 1.0;
            for (int q = 0; q <= o; ++q) {
              const int m = n + 2 * q - o;
              vj += lad[q] * sgn * Jterm(m);
              vi += lad[q] * Iterm(m);
              sgn = -sgn;  // (-1)^q for the J ladder
            }
            table.deriv(a, b)(p, fo) = std::pow(basis.k1, o) * vj;
            table.deriv(a, b)(p, fe) = std::pow(basis.k2, o) * vi * escale;
          }
      }
    }
  }

  if (basis.precondition.size() > 0)
    for (Eigen::MatrixXcd& m : table.d) m = m * basis.precondition;
  return table;
}

BasisSet dft_precondition(const BasisSet& basis) {
  if (basis.kind != BasisKind::PlaneWave)
    throw std::invalid_argument("dft_precondition applies to plane-wave bases");
  const Eigen::Index no = basis.count_osc, nt = basis.total();
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Identity(nt, nt);
  const double inv = 1.0 / std::sqrt(static_cast<double>(no));
  for (Eigen::Index j = 0; j < no; ++j)
    for (Eigen::Index col = 0; col < no; ++col)
      C(j, col) = inv * std::polar(1.0, 2.0 * std::numbers::pi * j * col / no);
  BasisSet out = basis;
  out.precondition = basis.precondition.size() > 0 ? Eigen::MatrixXcd(basis.precondition * C) : C;
  return out;
}

PointDerivs PointDerivs::from_table(const EvalTable& t, int func, int point) {
  PointDerivs d;
  d.w = t.value(func, point, 0, 0);
  if (t.max_order >= 1) {
    d.wx = t.value(func, point, 1, 0);
    d.wy = t.value(func, point, 0, 1);
  }
  if (t.max_order >= 2) {
    d.wxx = t.value(func, point, 2, 0);
    d.wxy = t.value(func, point, 1, 1);
    d.wyy = t.value(func, point, 0, 2);
  }
  if (t.max_order >= 3) {
    d.wxxx = t.value(func, point, 3, 0);
    d.wxxy = t.value(func, point, 2, 1);
    d.wxyy = t.value(func, point, 1, 2);
    d.wyyy = t.value(func, point, 0, 3);
  }
  return d;
}

PointDerivs fb_point_derivs(bool modified, int n, double k, Vec2 p) {
  const double r = std::hypot(p.x, p.y);
  const double theta = std::atan2(p.y, p.x);
  const int M = std::abs(n) + 3;
  std::vector<double> rad;
  double escale = 1.0;
  if (modified) {
    rad = bessel_i_scaled_array(M, k * r);
    escale = std::exp(k * r);
  } else {
    rad = bessel_j_array(M, k * r);
  }
  auto term = [&](int m) -> cd {
    const int am = std::abs(m);
    const cd ph = std::polar(1.0, m * theta);
    double v = rad[am];
    if (!modified && m < 0 && (am & 1)) v = -v;
    return v * ph;
  };
  auto deriv = [&](int a, int b) -> cd {
    const int o = a + b;
    const auto& lad = ladder(a, b);
    cd acc{};
    double sgn = 1.0;
    for (int q = 0; q <= o; ++q) {
      acc += lad[q] * (modified ? 1.0 : sgn) * term(n + 2 * q - o);
      sgn = -sgn;
    }
    return std::pow(k, o) * acc * escale;
  };
  PointDerivs d;
  d.w = deriv(0, 0);
  d.wx = deriv(1, 0);
  d.wy = deriv(0, 1);
  d.wxx = deriv(2, 0);
  d.wxy = deriv(1, 1);
  d.wyy = deriv(0, 2);
  d.wxxx = deriv(3, 0);
  d.wxxy = deriv(2, 1);
  d.wxyy = deriv(1, 2);
  d.wyyy = deriv(0, 3);
  return d;
}

}  // namespace platemps
