#include "platemps/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace platemps {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kPolySegments = 8192;
constexpr int kRowBuckets = 256;

// uniform double in [0,1) from the top 53 bits; fully determined by the
// mt19937_64 stream, unlike std::uniform_real_distribution
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

CurveJet TrigCurve::at(double t) const {
  CurveJet j;
  auto accum = [&](const std::vector<double>& c, const std::vector<double>& s, double& p,
                   double& d1, double& d2, double& d3) {
    for (std::size_t i = 0; i < c.size() || i < s.size(); ++i) {
      const double m = static_cast<double>(i + 1);
      const double cs = std::cos(m * t), sn = std::sin(m * t);
      const double a = i < c.size() ? c[i] : 0.0;
      const double b = i < s.size() ? s[i] : 0.0;
      p += a * cs + b * sn;
      d1 += m * (-a * sn + b * cs);
      d2 += m * m * (-a * cs - b * sn);
      d3 += m * m * m * (a * sn - b * cs);
    }
  };
  double zx = 0, zx1 = 0, zx2 = 0, zx3 = 0, zy = 0, zy1 = 0, zy2 = 0, zy3 = 0;
  accum(xc, xs, zx, zx1, zx2, zx3);
  accum(yc, ys, zy, zy1, zy2, zy3);
  j.p = {zx, zy};
  j.d1 = {zx1, zy1};
  j.d2 = {zx2, zy2};
  j.d3 = {zx3, zy3};
  return j;
}

std::string to_string(BcTag tag) {
  switch (tag) {
    case BcTag::Clamped: return "clamped";
    case BcTag::SimplySupported: return "simply-supported";
    case BcTag::Free: return "free";
  }
  return "?";
}

BcTag bc_tag_from_string(const std::string& name) {
  if (name == "clamped") return BcTag::Clamped;
  if (name == "simply-supported" || name == "simply_supported" || name == "ss")
    return BcTag::SimplySupported;
  if (name == "free") return BcTag::Free;
  throw std::invalid_argument("unknown boundary condition tag: " + name);
}

BcTag BcMap::tag_at(double t) const {
  t = std::fmod(t, kTwoPi);
  if (t < 0) t += kTwoPi;
  for (const Arc& a : arcs)
    if (t >= a.t0 && t < a.t1) return a.tag;
  return default_tag;
}

StarDomain::StarDomain(TrigCurve curve) : curve_(std::move(curve)) {
  // closure is automatic for trig polynomials; regularity and orientation are not
  poly_.resize(kPolySegments);
  double per = 0.0, area2 = 0.0;
  double prev_angle = 0.0, total_turn = 0.0;
  bool have_prev = false;
  star_ok_ = true;
  bbox_lo_ = {1e300, 1e300};
  bbox_hi_ = {-1e300, -1e300};
  for (int i = 0; i < kPolySegments; ++i) {
    const double t = kTwoPi * i / kPolySegments;
    const CurveJet j = curve_.at(t);
    const double speed = std::hypot(j.d1.x, j.d1.y);
    if (!(speed > 0.0)) throw std::invalid_argument("boundary curve has a zero-length tangent");
    poly_[i] = j.p;
    per += speed * kTwoPi / kPolySegments;
    area2 += cross(j.p, j.d1) * kTwoPi / kPolySegments;
    bbox_lo_.x = std::min(bbox_lo_.x, j.p.x);
    bbox_lo_.y = std::min(bbox_lo_.y, j.p.y);
    bbox_hi_.x = std::max(bbox_hi_.x, j.p.x);
    bbox_hi_.y = std::max(bbox_hi_.y, j.p.y);
    // star-shapedness wrt origin: polar angle must advance monotonically
    const double ang = std::atan2(j.p.y, j.p.x);
    if (have_prev) {
      double d = ang - prev_angle;
      while (d <= -std::numbers::pi) d += kTwoPi;
      while (d > std::numbers::pi) d -= kTwoPi;
      if (d <= 0.0) star_ok_ = false;
      total_turn += d;
    }
    prev_angle = ang;
    have_prev = true;
  }
  perimeter_ = per;
  area_ = 0.5 * area2;
  if (area_ <= 0.0)
    throw std::invalid_argument("boundary curve must be counterclockwise and enclose area");
  if (std::abs(total_turn) < std::numbers::pi) star_ok_ = false;
  diameter_ = std::max(bbox_hi_.x - bbox_lo_.x, bbox_hi_.y - bbox_lo_.y);

  rows_.assign(kRowBuckets, {});
  row_y0_ = bbox_lo_.y;
  row_dy_ = (bbox_hi_.y - bbox_lo_.y) / kRowBuckets;
  for (int i = 0; i < kPolySegments; ++i) {
    const Vec2 a = poly_[i];
    const Vec2 b = poly_[(i + 1) % kPolySegments];
    const double ylo = std::min(a.y, b.y), yhi = std::max(a.y, b.y);
    int r0 = static_cast<int>(std::floor((ylo - row_y0_) / row_dy_));
    int r1 = static_cast<int>(std::floor((yhi - row_y0_) / row_dy_));
    r0 = std::clamp(r0, 0, kRowBuckets - 1);
    r1 = std::clamp(r1, 0, kRowBuckets - 1);
    for (int r = r0; r <= r1; ++r) rows_[r].push_back(i);
  }
}

int StarDomain::winding(Vec2 p) const {
  // signed crossings of the horizontal ray x -> +inf with half-open vertex rule
  int r = static_cast<int>(std::floor((p.y - row_y0_) / row_dy_));
  if (r < 0 || r >= kRowBuckets) return 0;
  int w = 0;
  for (const std::int32_t i : rows_[r]) {
    const Vec2 a = poly_[i];
    const Vec2 b = poly_[(i + 1) % kPolySegments];
    const bool up = a.y <= p.y && b.y > p.y;
    const bool down = a.y > p.y && b.y <= p.y;
    if (!up && !down) continue;
    const double xi = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
    if (xi > p.x) w += up ? 1 : -1;
  }
  return w;
}

bool StarDomain::contains(Vec2 p) const {
  if (p.x < bbox_lo_.x || p.x > bbox_hi_.x || p.y < bbox_lo_.y || p.y > bbox_hi_.y) return false;
  return winding(p) != 0;
}

StarDomain make_circle(double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("circle radius must be positive");
  TrigCurve c;
  c.xc = {radius};
  c.ys = {radius};
  return StarDomain(std::move(c));
}

StarDomain make_paper_shape2() {
  TrigCurve c;
  c.xc = {1.0};
  c.ys = {1.0, 1.0 / 3.0};
  return StarDomain(std::move(c));
}

std::vector<BoundarySample> sample_boundary(const StarDomain& domain, int n, const BcMap& bc_map) {
  if (n < 4) throw std::invalid_argument("boundary sample count must be at least 4");
  std::vector<BoundarySample> out(n);
  for (int i = 0; i < n; ++i) {
    const double t = kTwoPi * i / n;
    const CurveJet j = domain.curve_at(t);
    const double speed = std::hypot(j.d1.x, j.d1.y);
    if (!(speed > 0.0)) throw std::runtime_error("zero-length tangent at boundary sample");
    BoundarySample& s = out[i];
    s.point = j.p;
    s.tangent = {j.d1.x / speed, j.d1.y / speed};
    s.normal = {s.tangent.y, -s.tangent.x};  // outward for a CCW curve
    const double denom = j.d1.x * j.d2.y - j.d1.y * j.d2.x;
    s.curvature_radius = speed * speed * speed / denom;  // signed; +inf on straight runs
    s.weight = speed * kTwoPi / n;                       // periodic trapezoid rule
    s.bc = bc_map.tag_at(t);
  }
  return out;
}

InteriorSampleSet sample_interior(const StarDomain& domain, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("interior sample count must be at least 1");
  InteriorSampleSet set;
  set.seed = seed;
  set.points.reserve(n);
  std::mt19937_64 rng(seed);
  const Vec2 lo = domain.bbox_lo(), hi = domain.bbox_hi();
  std::uint64_t attempts = 0;
  while (set.points.size() < static_cast<std::size_t>(n)) {
    ++attempts;
    const Vec2 p{lo.x + (hi.x - lo.x) * uniform01(rng), lo.y + (hi.y - lo.y) * uniform01(rng)};
    if (domain.contains(p)) set.points.push_back(p);
    if (attempts % 10000 == 0 && set.points.size() < attempts / 100)
      throw std::runtime_error("interior rejection sampling acceptance rate below 1%");
  }
  set.attempts = attempts;
  set.cell_weight = domain.area() / n;
  return set;
}

}  // namespace platemps
