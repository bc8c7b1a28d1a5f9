#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace platemps {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

/// Position and first three parameter derivatives of a boundary curve.
struct CurveJet {
  Vec2 p, d1, d2, d3;
};

// Closed curve as a trigonometric polynomial:
//   x(t) = sum_j xc[j] cos((j+1) t) + xs[j] sin((j+1) t),  same for y.
// Derivatives are exact. Both built-in shapes are instances.
struct TrigCurve {
  std::vector<double> xc, xs, yc, ys;
  CurveJet at(double t) const;
};

enum class BcTag { Clamped, SimplySupported, Free };

std::string to_string(BcTag tag);
BcTag bc_tag_from_string(const std::string& name);

/// One quadrature node on the boundary.
struct BoundarySample {
  Vec2 point;
  Vec2 normal;    // unit, outward
  Vec2 tangent;   // unit, normal rotated +90 degrees (travel direction)
  double curvature_radius = 0.0;  // signed, positive where convex
  double weight = 0.0;            // arc length per sample
  BcTag bc = BcTag::Clamped;
};

struct InteriorSampleSet {
  std::vector<Vec2> points;
  double cell_weight = 0.0;  // area / count
  std::uint64_t seed = 0;
  std::uint64_t attempts = 0;  // rejection-sampling trials used
};

/// Assignment of bc tags to parameter intervals [t0, t1).
struct BcMap {
  struct Arc {
    double t0, t1;
    BcTag tag;
  };
  std::vector<Arc> arcs;  // empty means a single tag everywhere
  BcTag default_tag = BcTag::Clamped;

  static BcMap uniform(BcTag tag) { return BcMap{{}, tag}; }
  BcTag tag_at(double t) const;
};

/// Smooth star-shaped domain given by a closed parametric boundary curve.
///
/// The curve must be counterclockwise and enclose the origin. Membership
/// queries use the winding number of a fixed 8192-segment polyline, so the
/// test is independent of the quadrature resolution.
class StarDomain {
 public:
  explicit StarDomain(TrigCurve curve);

  CurveJet curve_at(double t) const { return curve_.at(t); }

  Vec2 bbox_lo() const { return bbox_lo_; }
  Vec2 bbox_hi() const { return bbox_hi_; }
  double area() const { return area_; }
  double perimeter() const { return perimeter_; }
  /// Max bounding-box extent; the length scale used for tolerances.
  double diameter() const { return diameter_; }
  bool star_shaped_wrt_origin() const { return star_ok_; }

  bool contains(Vec2 p) const;

 private:
  TrigCurve curve_;
  Vec2 bbox_lo_, bbox_hi_;
  double area_ = 0.0, perimeter_ = 0.0, diameter_ = 0.0;
  bool star_ok_ = true;

  // membership polyline with row buckets over y for fast winding queries
  std::vector<Vec2> poly_;
  std::vector<std::vector<std::int32_t>> rows_;
  double row_y0_ = 0.0, row_dy_ = 1.0;
  int winding(Vec2 p) const;
};

StarDomain make_circle(double radius);
StarDomain make_paper_shape2();

std::vector<BoundarySample> sample_boundary(const StarDomain& domain, int n,
                                            const BcMap& bc_map = BcMap::uniform(BcTag::Clamped));

InteriorSampleSet sample_interior(const StarDomain& domain, int n, std::uint64_t seed);

}  // namespace platemps
