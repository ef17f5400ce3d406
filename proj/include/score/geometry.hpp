#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace score {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline bool operator==(const Vec3& a, const Vec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }

inline double norm(const Vec3& v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }
inline double manhattan(const Vec3& a, const Vec3& b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.z - b.z);
}
inline bool is_finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

/// Ordered list of 3D points in meters, ego frame. Valid polylines carry
/// at least two finite points; validation is reported, not enforced here.
using Polyline = std::vector<Vec3>;

/// Metric extents of the bird's-eye-view plane around the ego vehicle.
struct BEVExtent {
  double x_min = -50.0;
  double x_max = 50.0;
  double y_min = -25.0;
  double y_max = 25.0;

  bool valid() const { return x_min < x_max && y_min < y_max; }
  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  bool contains(double x, double y) const {
    return x >= x_min && x <= x_max && y >= y_min && y <= y_max;
  }
};

struct ZRange {
  double min = -5.0;
  double max = 5.0;
};

/// SE(2) pose: translation in meters, yaw in radians.
struct Pose2 {
  double x = 0.0;
  double y = 0.0;
  double yaw = 0.0;
};

/// Composition b∘a: applies a first, then b.
Pose2 compose(const Pose2& b, const Pose2& a);
/// Transforms a point expressed in the pose's frame into the parent frame.
Vec3 apply(const Pose2& t, const Vec3& p);
Pose2 inverse(const Pose2& t);

/// Affine map of a metric ego-frame point into [0,1]^3; out-of-extent
/// coordinates clamp to the unit cube. Throws on non-finite input.
Vec3 normalize_point(const Vec3& p, const BEVExtent& extent = {}, const ZRange& z = {});
/// Inverse of normalize_point for in-range normalized points.
Vec3 denormalize_point(const Vec3& p, const BEVExtent& extent = {}, const ZRange& z = {});

double polyline_length(std::span<const Vec3> pts);
/// Point at arclength s along the piecewise-linear curve; s clamps to [0, L].
Vec3 point_at_arclength(std::span<const Vec3> pts, double s);
/// Points at the given arclength fractions of the total length.
std::vector<Vec3> points_at_fractions(std::span<const Vec3> pts, std::span<const double> fractions);

/// n points at arclengths k*L/(n-1), k = 0..n-1, by linear interpolation.
/// Endpoints are preserved exactly. Throws for n < 2 or zero-length input.
Polyline resample_equidistant(const Polyline& p, int n);

/// Symmetric Chamfer distance between point sets: the average of the two
/// directed mean nearest-neighbor distances.
double chamfer(std::span<const Vec3> a, std::span<const Vec3> b);

/// Clips a polyline against the extent rectangle (z is passed through).
/// A polyline that leaves and re-enters yields multiple pieces; pieces
/// shorter than two points are dropped.
std::vector<Polyline> clip_polyline(const Polyline& p, const BEVExtent& extent);

}  // namespace score
