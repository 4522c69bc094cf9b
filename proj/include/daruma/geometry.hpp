#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

#include "daruma/error.hpp"

namespace daruma {

inline constexpr double kPi = std::numbers::pi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
  friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(b - a); }

// Wraps an angle into [-pi, pi).
inline double wrap_angle(double a) {
  double w = std::remainder(a, 2.0 * kPi);  // (-pi, pi]
  if (w == kPi) w = -kPi;
  return w;
}

// Signed shortest-arc difference b - a, in [-pi, pi).
inline double angle_diff(double b, double a) { return wrap_angle(b - a); }

// Shortest-arc interpolation between two headings; u in [0, 1].
inline double lerp_angle(double a, double b, double u) {
  return wrap_angle(a + u * angle_diff(b, a));
}

inline double lerp(double a, double b, double u) { return a + u * (b - a); }

// Planar pose. Heading is kept normalized to [-pi, pi).
struct Pose2D {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;  // radians in [-pi, pi)

  Vec2 position() const { return {x, y}; }
  friend bool operator==(const Pose2D& a, const Pose2D& b) {
    return a.x == b.x && a.y == b.y && a.heading == b.heading;
  }
};

inline Pose2D make_pose(double x, double y, double heading) {
  return Pose2D{x, y, wrap_angle(heading)};
}

inline bool pose_finite(const Pose2D& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.heading);
}

// Oriented rectangle footprint: center pose plus (length, width) extents.
// Length runs along the heading axis, width across it.
struct OrientedRect {
  Pose2D center;
  double length = 0.0;
  double width = 0.0;

  std::array<Vec2, 4> corners() const {
    const double c = std::cos(center.heading);
    const double s = std::sin(center.heading);
    const double hl = 0.5 * length;
    const double hw = 0.5 * width;
    const Vec2 ax{c, s};    // along heading
    const Vec2 ay{-s, c};   // across heading
    const Vec2 o = center.position();
    return {o + hl * ax + hw * ay, o + hl * ax - hw * ay,
            o - hl * ax - hw * ay, o - hl * ax + hw * ay};
  }
};

namespace detail {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

inline Interval project(const std::array<Vec2, 4>& pts, Vec2 axis) {
  double lo = dot(pts[0], axis);
  double hi = lo;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double v = dot(pts[i], axis);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

}  // namespace detail

// Separating-axis test over the 4 candidate edge normals. Touching edges
// count as intersecting (separation requires a strict gap).
inline bool rects_intersect(const OrientedRect& a, const OrientedRect& b) {
  const auto ca = a.corners();
  const auto cb = b.corners();
  const double cah = std::cos(a.center.heading), sah = std::sin(a.center.heading);
  const double cbh = std::cos(b.center.heading), sbh = std::sin(b.center.heading);
  const std::array<Vec2, 4> axes = {Vec2{cah, sah}, Vec2{-sah, cah},
                                    Vec2{cbh, sbh}, Vec2{-sbh, cbh}};
  for (const Vec2& axis : axes) {
    const auto ia = detail::project(ca, axis);
    const auto ib = detail::project(cb, axis);
    if (ia.hi < ib.lo || ib.hi < ia.lo) return false;
  }
  return true;
}

using Polygon = std::vector<Vec2>;

// True if q lies on segment [a, b] (inclusive endpoints).
inline bool point_on_segment(Vec2 q, Vec2 a, Vec2 b) {
  const double cr = cross(b - a, q - a);
  if (cr != 0.0) return false;
  return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

// Boundary-inclusive point-in-polygon (crossing number). The polygon must
// be simple; orientation does not matter.
inline bool point_in_polygon(Vec2 q, const Polygon& poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (point_on_segment(q, poly[i], poly[(i + 1) % n])) return true;
  }
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 a = poly[i];
    const Vec2 b = poly[j];
    const bool straddles = (a.y > q.y) != (b.y > q.y);
    if (straddles) {
      const double x_at = a.x + (q.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (q.x < x_at) inside = !inside;
    }
  }
  return inside;
}

// Proper or touching intersection of segments [p1,p2] and [p3,p4].
inline bool segments_intersect(Vec2 p1, Vec2 p2, Vec2 p3, Vec2 p4) {
  const auto orient = [](Vec2 a, Vec2 b, Vec2 c) {
    const double v = cross(b - a, c - a);
    return (v > 0.0) - (v < 0.0);
  };
  const int o1 = orient(p1, p2, p3);
  const int o2 = orient(p1, p2, p4);
  const int o3 = orient(p3, p4, p1);
  const int o4 = orient(p3, p4, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && point_on_segment(p3, p1, p2)) return true;
  if (o2 == 0 && point_on_segment(p4, p1, p2)) return true;
  if (o3 == 0 && point_on_segment(p1, p3, p4)) return true;
  if (o4 == 0 && point_on_segment(p2, p3, p4)) return true;
  return false;
}

// A polygon is simple when no two non-adjacent edges intersect. O(n^2),
// fine at the scene sizes this library handles.
inline bool polygon_is_simple(const Polygon& poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a1 = poly[i];
    const Vec2 a2 = poly[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect(a1, a2, poly[j], poly[(j + 1) % n])) return false;
    }
  }
  return true;
}

inline Vec2 polygon_centroid(const Polygon& poly) {
  Vec2 c{0.0, 0.0};
  for (const Vec2& v : poly) c = c + v;
  const double n = static_cast<double>(poly.size());
  return {c.x / n, c.y / n};
}

// Scales polygon about its vertex centroid.
inline Polygon polygon_scaled(const Polygon& poly, double scale) {
  const Vec2 c = polygon_centroid(poly);
  Polygon out;
  out.reserve(poly.size());
  for (const Vec2& v : poly) out.push_back(c + scale * (v - c));
  return out;
}

inline Polygon polygon_shifted(const Polygon& poly, Vec2 d) {
  Polygon out;
  out.reserve(poly.size());
  for (const Vec2& v : poly) out.push_back(v + d);
  return out;
}

// Open polyline with arc-length parameterization helpers.
class Polyline {
public:
  Polyline() = default;
  explicit Polyline(std::vector<Vec2> pts) : pts_(std::move(pts)) {
    cum_.resize(pts_.size(), 0.0);
    for (std::size_t i = 1; i < pts_.size(); ++i) {
      cum_[i] = cum_[i - 1] + distance(pts_[i - 1], pts_[i]);
    }
  }

  const std::vector<Vec2>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }
  double length() const { return cum_.empty() ? 0.0 : cum_.back(); }

  // Point at arc length s, clamped to [0, length].
  Vec2 point_at(double s) const {
    if (pts_.empty()) return {};
    if (pts_.size() == 1 || s <= 0.0) return pts_.front();
    if (s >= length()) return pts_.back();
    const std::size_t i = segment_index(s);
    const double seg = cum_[i + 1] - cum_[i];
    const double u = seg > 0.0 ? (s - cum_[i]) / seg : 0.0;
    return pts_[i] + u * (pts_[i + 1] - pts_[i]);
  }

  // Tangent heading at arc length s (heading of the containing segment).
  double heading_at(double s) const {
    if (pts_.size() < 2) return 0.0;
    std::size_t i = segment_index(std::clamp(s, 0.0, length()));
    i = std::min(i, pts_.size() - 2);
    const Vec2 d = pts_[i + 1] - pts_[i];
    return std::atan2(d.y, d.x);
  }

  // Arc length of the closest point on the polyline to q.
  double project(Vec2 q) const {
    if (pts_.size() < 2) return 0.0;
    double best_d2 = std::numeric_limits<double>::infinity();
    double best_s = 0.0;
    for (std::size_t i = 0; i + 1 < pts_.size(); ++i) {
      const Vec2 a = pts_[i];
      const Vec2 b = pts_[i + 1];
      const Vec2 ab = b - a;
      const double len2 = dot(ab, ab);
      double u = len2 > 0.0 ? dot(q - a, ab) / len2 : 0.0;
      u = std::clamp(u, 0.0, 1.0);
      const Vec2 p = a + u * ab;
      const double d2 = dot(q - p, q - p);
      if (d2 < best_d2) {
        best_d2 = d2;
        best_s = cum_[i] + u * std::sqrt(len2);
      }
    }
    return best_s;
  }

  // Perpendicular distance from q to the polyline.
  double lateral_distance(Vec2 q) const {
    return distance(q, point_at(project(q)));
  }

private:
  std::size_t segment_index(double s) const {
    const auto it = std::upper_bound(cum_.begin(), cum_.end(), s);
    const std::size_t i = static_cast<std::size_t>(it - cum_.begin());
    return i == 0 ? 0 : std::min(i - 1, pts_.size() - 2);
  }

  std::vector<Vec2> pts_;
  std::vector<double> cum_;
};

}  // namespace daruma
