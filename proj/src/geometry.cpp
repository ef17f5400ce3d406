#include "score/geometry.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace score {

Pose2 compose(const Pose2& b, const Pose2& a) {
  const double c = std::cos(b.yaw), s = std::sin(b.yaw);
  Pose2 out;
  out.x = b.x + c * a.x - s * a.y;
  out.y = b.y + s * a.x + c * a.y;
  out.yaw = std::remainder(a.yaw + b.yaw, 2.0 * M_PI);
  return out;
}

Vec3 apply(const Pose2& t, const Vec3& p) {
  const double c = std::cos(t.yaw), s = std::sin(t.yaw);
  return {t.x + c * p.x - s * p.y, t.y + s * p.x + c * p.y, p.z};
}

Pose2 inverse(const Pose2& t) {
  const double c = std::cos(t.yaw), s = std::sin(t.yaw);
  return {-(c * t.x + s * t.y), -(-s * t.x + c * t.y), std::remainder(-t.yaw, 2.0 * M_PI)};
}

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

Vec3 normalize_point(const Vec3& p, const BEVExtent& extent, const ZRange& z) {
  if (!is_finite(p)) throw std::invalid_argument("normalize_point: non-finite input");
  if (!extent.valid() || !(z.min < z.max))
    throw std::invalid_argument("normalize_point: invalid extent or z range");
  return {clamp01((p.x - extent.x_min) / extent.width()),
          clamp01((p.y - extent.y_min) / extent.height()),
          clamp01((p.z - z.min) / (z.max - z.min))};
}

Vec3 denormalize_point(const Vec3& p, const BEVExtent& extent, const ZRange& z) {
  if (!is_finite(p)) throw std::invalid_argument("denormalize_point: non-finite input");
  return {extent.x_min + p.x * extent.width(),
          extent.y_min + p.y * extent.height(),
          z.min + p.z * (z.max - z.min)};
}

double polyline_length(std::span<const Vec3> pts) {
  double total = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) total += distance(pts[i - 1], pts[i]);
  return total;
}

Vec3 point_at_arclength(std::span<const Vec3> pts, double s) {
  if (pts.empty()) throw std::invalid_argument("point_at_arclength: empty polyline");
  if (s <= 0.0) return pts.front();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double seg = distance(pts[i - 1], pts[i]);
    if (s <= seg) {
      if (seg == 0.0) return pts[i];
      const double t = s / seg;
      return pts[i - 1] + t * (pts[i] - pts[i - 1]);
    }
    s -= seg;
  }
  return pts.back();
}

std::vector<Vec3> points_at_fractions(std::span<const Vec3> pts, std::span<const double> fractions) {
  const double total = polyline_length(pts);
  std::vector<Vec3> out;
  out.reserve(fractions.size());
  for (double f : fractions) out.push_back(point_at_arclength(pts, f * total));
  return out;
}

Polyline resample_equidistant(const Polyline& p, int n) {
  if (n < 2) throw std::invalid_argument("resample_equidistant: n must be >= 2");
  if (p.size() < 2) throw std::invalid_argument("resample_equidistant: need >= 2 input points");
  const double total = polyline_length(p);
  if (total <= 0.0) throw std::invalid_argument("resample_equidistant: zero-length polyline");
  Polyline out;
  out.reserve(static_cast<std::size_t>(n));
  out.push_back(p.front());
  for (int k = 1; k + 1 < n; ++k)
    out.push_back(point_at_arclength(p, total * static_cast<double>(k) / (n - 1)));
  out.push_back(p.back());
  return out;
}

double chamfer(std::span<const Vec3> a, std::span<const Vec3> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("chamfer: empty point set");
  auto directed = [](std::span<const Vec3> from, std::span<const Vec3> to) {
    double sum = 0.0;
    for (const Vec3& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const Vec3& q : to) best = std::min(best, distance(p, q));
      sum += best;
    }
    return sum / static_cast<double>(from.size());
  };
  return 0.5 * (directed(a, b) + directed(b, a));
}

namespace {

// Liang-Barsky clip of one segment against the extent rectangle in xy.
// Returns the parameter interval [t0, t1] of the retained part, or false.
bool clip_segment(const Vec3& p, const Vec3& q, const BEVExtent& e, double& t0, double& t1) {
  const double dx = q.x - p.x, dy = q.y - p.y;
  t0 = 0.0;
  t1 = 1.0;
  const double checks[4][2] = {
      {-dx, p.x - e.x_min}, {dx, e.x_max - p.x}, {-dy, p.y - e.y_min}, {dy, e.y_max - p.y}};
  for (const auto& [den, num] : checks) {
    if (den == 0.0) {
      if (num < 0.0) return false;
      continue;
    }
    const double t = num / den;
    if (den < 0.0) {
      if (t > t1) return false;
      t0 = std::max(t0, t);
    } else {
      if (t < t0) return false;
      t1 = std::min(t1, t);
    }
  }
  return t0 <= t1;
}

}  // namespace

std::vector<Polyline> clip_polyline(const Polyline& p, const BEVExtent& extent) {
  std::vector<Polyline> pieces;
  Polyline current;
  auto flush = [&] {
    if (current.size() >= 2) pieces.push_back(current);
    current.clear();
  };
  constexpr double kEps = 1e-9;
  for (std::size_t i = 1; i < p.size(); ++i) {
    double t0, t1;
    if (!clip_segment(p[i - 1], p[i], extent, t0, t1) || t1 - t0 < kEps) {
      flush();
      continue;
    }
    const Vec3 a = p[i - 1] + t0 * (p[i] - p[i - 1]);
    const Vec3 b = p[i - 1] + t1 * (p[i] - p[i - 1]);
    if (!current.empty() && distance(current.back(), a) < kEps) {
      current.push_back(b);
    } else {
      flush();
      current = {a, b};
    }
  }
  flush();
  return pieces;
}

}  // namespace score
