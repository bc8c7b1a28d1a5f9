#include "platemps/boundary.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace platemps {

namespace {

using cd = std::complex<double>;

cd second_directional(const PointDerivs& d, Vec2 u, Vec2 v) {
  return d.wxx * (u.x * v.x) + d.wxy * (u.x * v.y + u.y * v.x) + d.wyy * (u.y * v.y);
}

// contraction of the symmetric third-derivative tensor with u, v, w
cd third_directional(const PointDerivs& d, Vec2 u, Vec2 v, Vec2 w) {
  return d.wxxx * (u.x * v.x * w.x) + d.wxxy * (u.x * v.x * w.y + u.x * v.y * w.x + u.y * v.x * w.x) +
         d.wxyy * (u.x * v.y * w.y + u.y * v.x * w.y + u.y * v.y * w.x) + d.wyyy * (u.y * v.y * w.y);
}

int required_order(BcTag tag) {
  switch (tag) {
    case BcTag::Clamped: return 1;
    case BcTag::SimplySupported: return 2;
    case BcTag::Free: return 3;
  }
  return 3;
}

}  // namespace

cd torsion_moment(const PointDerivs& d, Vec2 n, Vec2 t, const PlateMaterial& material) {
  const cd wnn = second_directional(d, n, n);
  const cd wtt = second_directional(d, t, t);
  return -material.D * (wnn + material.nu * wtt);
}

cd kelvin_kirchhoff(const PointDerivs& d, Vec2 n, Vec2 t, double curvature_radius,
                    const PlateMaterial& material) {
  if (curvature_radius == 0.0) throw std::domain_error("kelvin_kirchhoff: zero curvature radius");
  const cd wnnn = third_directional(d, n, n, n);
  const cd wntt = third_directional(d, n, t, t);
  const cd wnn = second_directional(d, n, n);
  const cd wtt = second_directional(d, t, t);
  const double kappa = 1.0 / curvature_radius;  // 0 for straight edges (R = inf)
  return -material.D *
         (wnnn + (2.0 - material.nu) * wntt - (1.0 - material.nu) * kappa * (wnn - wtt));
}

ResidualRowSet residual_rows(const BasisSet& basis, const std::vector<BoundarySample>& samples,
                             const PlateMaterial& material) {
  if (samples.empty()) throw std::invalid_argument("residual_rows: no boundary samples");
  int order = 1;
  double diam_x0 = 1e300, diam_x1 = -1e300, diam_y0 = 1e300, diam_y1 = -1e300;
  for (const BoundarySample& s : samples) {
    order = std::max(order, required_order(s.bc));
    diam_x0 = std::min(diam_x0, s.point.x);
    diam_x1 = std::max(diam_x1, s.point.x);
    diam_y0 = std::min(diam_y0, s.point.y);
    diam_y1 = std::max(diam_y1, s.point.y);
  }
  const double diam = std::max(diam_x1 - diam_x0, diam_y1 - diam_y0);

  std::vector<Vec2> pts(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) pts[i] = samples[i].point;
  const EvalTable table = eval_basis(basis, pts, order);

  ResidualRowSet rows;
  rows.k_plus = std::max(basis.k1, basis.k2);
  const double k = rows.k_plus;
  const double D = material.D;
  const auto nf = static_cast<Eigen::Index>(basis.total());
  rows.B.resize(2 * static_cast<Eigen::Index>(samples.size()), nf);
  rows.row_tags.resize(2 * samples.size());

  for (std::size_t i = 0; i < samples.size(); ++i) {
    const BoundarySample& s = samples[i];
    if (s.bc == BcTag::Free && std::abs(s.curvature_radius) < 1e-9 * diam)
      throw std::runtime_error("residual_rows: degenerate curvature radius on free boundary");
    const double sw = std::sqrt(s.weight);
    for (Eigen::Index f = 0; f < nf; ++f) {
      const PointDerivs pd = PointDerivs::from_table(table, static_cast<int>(f), static_cast<int>(i));
      cd r0, r1;
      switch (s.bc) {
        case BcTag::Clamped:
          r0 = pd.w;
          r1 = (pd.wx * s.normal.x + pd.wy * s.normal.y) / k;
          break;
        case BcTag::SimplySupported:
          r0 = pd.w;
          r1 = torsion_moment(pd, s.normal, s.tangent, material) / (D * k * k);
          break;
        case BcTag::Free:
          r0 = torsion_moment(pd, s.normal, s.tangent, material) / (D * k * k);
          r1 = kelvin_kirchhoff(pd, s.normal, s.tangent, s.curvature_radius, material) /
               (D * k * k * k);
          break;
      }
      rows.B(2 * i, f) = sw * r0;
      rows.B(2 * i + 1, f) = sw * r1;
    }
    rows.row_tags[2 * i] = s.bc;
    rows.row_tags[2 * i + 1] = s.bc;
  }
  return rows;
}

std::array<double, 3> tension_by_tag(const ResidualRowSet& rows, const Eigen::VectorXcd& u) {
  std::array<double, 3> out{0.0, 0.0, 0.0};
  const Eigen::VectorXcd bu = rows.B * u;
  for (Eigen::Index r = 0; r < bu.size(); ++r)
    out[static_cast<int>(rows.row_tags[r])] += std::norm(bu(r));
  return out;
}

}  // namespace platemps
