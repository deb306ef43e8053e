#pragma once

/**
 * @file geometry.hpp
 * @brief Exact lattice positions, direction vectors, rigid motions, and the
 * small set of polygon predicates the tiling checks need.
 *
 * Positions are held as integer coefficient vectors over the n unit
 * directions; floats appear only when projecting to the plane. All real
 * comparisons elsewhere in the library use the single tolerance kEps.
 */

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace krinkle {

inline constexpr double kEps = 1e-9;  // global geometric tolerance, edge length 1

struct RealPoint {
  double x = 0.0;
  double y = 0.0;

  RealPoint operator+(const RealPoint& o) const { return {x + o.x, y + o.y}; }
  RealPoint operator-(const RealPoint& o) const { return {x - o.x, y - o.y}; }
  RealPoint operator*(double s) const { return {x * s, y * s}; }
  RealPoint& operator+=(const RealPoint& o) { x += o.x; y += o.y; return *this; }
};

inline double dot(const RealPoint& a, const RealPoint& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const RealPoint& a, const RealPoint& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const RealPoint& a) { return std::hypot(a.x, a.y); }
inline double distance(const RealPoint& a, const RealPoint& b) { return norm(a - b); }

/// Unit vector in direction i of n: (cos 2*pi*i/n, sin 2*pi*i/n).
inline RealPoint unit_vector(int i, int n) {
  if (n <= 0 || i < 0 || i >= n) throw std::out_of_range("direction index out of [0, n)");
  const double a = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
  return {std::cos(a), std::sin(a)};
}

/**
 * Integer coefficient vector over the n unit directions. Coefficient c_d is
 * the signed number of unit steps in direction d needed to reach the point
 * from the origin. Equal coefficient vectors are always the same point; the
 * converse is not assumed (distinct vectors may project equally).
 */
struct LatticePoint {
  std::vector<int> coeffs;

  LatticePoint() = default;
  explicit LatticePoint(int n) : coeffs(static_cast<std::size_t>(n), 0) {
    if (n <= 0) throw std::invalid_argument("direction count must be positive");
  }

  int order() const { return static_cast<int>(coeffs.size()); }

  static LatticePoint zero(int n) { return LatticePoint(n); }

  static LatticePoint unit(int direction, int n) {
    LatticePoint p(n);
    if (direction < 0 || direction >= n)
      throw std::out_of_range("direction index out of [0, n)");
    p.coeffs[static_cast<std::size_t>(direction)] = 1;
    return p;
  }

  bool operator==(const LatticePoint&) const = default;

  LatticePoint& operator+=(const LatticePoint& o) {
    check_order(o);
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
  }
  LatticePoint& operator-=(const LatticePoint& o) {
    check_order(o);
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    return *this;
  }
  LatticePoint operator+(const LatticePoint& o) const { LatticePoint r = *this; r += o; return r; }
  LatticePoint operator-(const LatticePoint& o) const { LatticePoint r = *this; r -= o; return r; }
  LatticePoint operator-() const {
    LatticePoint r = *this;
    for (int& c : r.coeffs) c = -c;
    return r;
  }
  LatticePoint operator*(int s) const {
    LatticePoint r = *this;
    for (int& c : r.coeffs) c *= s;
    return r;
  }

  /// Rotation by 2*pi*r/n about the origin: coefficient of direction d moves
  /// to direction (d + r) mod n.
  LatticePoint rotated(int r) const {
    const int n = order();
    LatticePoint out(n);
    const int rr = ((r % n) + n) % n;
    for (int d = 0; d < n; ++d) {
      if (coeffs[static_cast<std::size_t>(d)] != 0)
        out.coeffs[static_cast<std::size_t>((d + rr) % n)] += coeffs[static_cast<std::size_t>(d)];
    }
    return out;
  }

 private:
  void check_order(const LatticePoint& o) const {
    if (coeffs.size() != o.coeffs.size())
      throw std::invalid_argument("lattice points of different order");
  }
};

/// Evaluate the point in the plane, accumulating in double precision.
inline RealPoint project(const LatticePoint& p) {
  RealPoint q;
  const int n = p.order();
  for (int i = 0; i < n; ++i) {
    const int c = p.coeffs[static_cast<std::size_t>(i)];
    if (c != 0) q += unit_vector(i, n) * static_cast<double>(c);
  }
  return q;
}

/// Points visited when walking `dirs` from `start`: len(dirs) + 1 entries.
inline std::vector<LatticePoint> trace_path(const LatticePoint& start, std::span<const int> dirs) {
  std::vector<LatticePoint> points;
  points.reserve(dirs.size() + 1);
  points.push_back(start);
  const int n = start.order();
  for (int d : dirs) {
    if (d < 0 || d >= n) throw std::out_of_range("direction index out of [0, n)");
    LatticePoint next = points.back();
    next.coeffs[static_cast<std::size_t>(d)] += 1;
    points.push_back(std::move(next));
  }
  return points;
}

/**
 * A rigid placement: rotation by 2*pi*rotation_index/n about the origin
 * followed by a lattice translation. The optional half-turn (rotation by pi
 * about a fixed real point) exists solely for the offset closure motion and
 * then stands alone: the other two fields stay at identity.
 */
struct RigidMotion {
  int rotation_index = 0;
  LatticePoint translation;
  std::optional<RealPoint> half_turn_about;

  static RigidMotion identity(int n) { return {0, LatticePoint::zero(n), std::nullopt}; }
  static RigidMotion rotation(int r, int n) { return {r, LatticePoint::zero(n), std::nullopt}; }
  static RigidMotion half_turn(RealPoint center, int n) {
    return {0, LatticePoint::zero(n), center};
  }
};

/// Apply a lattice motion. Half-turn motions act on real points only.
inline LatticePoint apply_motion(const RigidMotion& motion, const LatticePoint& p) {
  if (motion.half_turn_about)
    throw std::logic_error("half-turn motions act on real points, not lattice points");
  return p.rotated(motion.rotation_index) + motion.translation;
}

inline RealPoint apply_motion_real(const RigidMotion& motion, const RealPoint& p, int n) {
  if (motion.half_turn_about) {
    const RealPoint c = *motion.half_turn_about;
    return {2.0 * c.x - p.x, 2.0 * c.y - p.y};
  }
  const double a = 2.0 * std::numbers::pi * static_cast<double>(motion.rotation_index) /
                   static_cast<double>(n);
  const double ca = std::cos(a), sa = std::sin(a);
  const RealPoint t = project(motion.translation);
  return {ca * p.x - sa * p.y + t.x, sa * p.x + ca * p.y + t.y};
}

/// Compose two pure-lattice motions: (outer o inner).
inline RigidMotion compose(const RigidMotion& outer, const RigidMotion& inner) {
  if (outer.half_turn_about || inner.half_turn_about)
    throw std::logic_error("compose requires pure lattice motions");
  const int n = outer.translation.order();
  RigidMotion out;
  out.rotation_index = (outer.rotation_index + inner.rotation_index) % n;
  out.translation = outer.translation + inner.translation.rotated(outer.rotation_index);
  return out;
}

// ---------------------------------------------------------------------------
// Polygon predicates (doubles, kEps-guarded)
// ---------------------------------------------------------------------------

inline double polygon_signed_area(std::span<const RealPoint> poly) {
  double s = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) s += cross(poly[i], poly[(i + 1) % n]);
  return 0.5 * s;
}

inline double point_segment_distance(const RealPoint& p, const RealPoint& a, const RealPoint& b) {
  const RealPoint ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  double t = dot(p - a, ab) / len2;
  t = std::max(0.0, std::min(1.0, t));
  return distance(p, a + ab * t);
}

/// Strict interior crossing of two segments.
inline bool segments_properly_cross(const RealPoint& a, const RealPoint& b,
                                    const RealPoint& c, const RealPoint& d) {
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
         ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

inline double segment_distance(const RealPoint& a, const RealPoint& b,
                               const RealPoint& c, const RealPoint& d) {
  if (segments_properly_cross(a, b, c, d)) return 0.0;
  return std::min(std::min(point_segment_distance(a, c, d), point_segment_distance(b, c, d)),
                  std::min(point_segment_distance(c, a, b), point_segment_distance(d, a, b)));
}

/**
 * Brute-force simplicity test. Non-adjacent edges must stay eps apart;
 * adjacent edges may touch only at their shared vertex, which admits the
 * straight-vertex (collinear continuation) case.
 */
inline bool is_simple_polygon(std::span<const RealPoint> poly, double eps = kEps) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const RealPoint& a = poly[i];
    const RealPoint& b = poly[(i + 1) % n];
    if (distance(a, b) <= eps) return false;  // degenerate edge
    for (std::size_t j = i + 1; j < n; ++j) {
      const RealPoint& c = poly[j];
      const RealPoint& d = poly[(j + 1) % n];
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // Shared vertex is b == c (j == i+1) or a == d (wrap); the far
        // endpoints must not touch the other segment.
        if (j == i + 1) {
          if (point_segment_distance(a, c, d) <= eps) return false;
          if (point_segment_distance(d, a, b) <= eps) return false;
        } else {
          if (point_segment_distance(b, c, d) <= eps) return false;
          if (point_segment_distance(c, a, b) <= eps) return false;
        }
      } else {
        if (segment_distance(a, b, c, d) <= eps) return false;
      }
    }
  }
  return true;
}

/// Number of vertices whose incident edges continue straight through them.
inline int count_straight_vertices(std::span<const RealPoint> poly, double eps = kEps) {
  const std::size_t n = poly.size();
  int count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const RealPoint prev = poly[(i + n - 1) % n];
    const RealPoint v = poly[i];
    const RealPoint next = poly[(i + 1) % n];
    const RealPoint u = v - prev;
    const RealPoint w = next - v;
    if (std::abs(cross(u, w)) <= eps && dot(u, w) > 0) ++count;
  }
  return count;
}

/// Interior angle at v of a counterclockwise polygon, in (0, 2*pi).
inline double interior_angle(const RealPoint& prev, const RealPoint& v, const RealPoint& next) {
  const RealPoint u = v - prev;
  const RealPoint w = next - v;
  const double turn = std::atan2(cross(u, w), dot(u, w));
  return std::numbers::pi - turn;
}

/// Winding-number containment (crossing form); callers exclude points near
/// edges beforehand.
inline bool polygon_contains(std::span<const RealPoint> poly, const RealPoint& p) {
  int wn = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const RealPoint& a = poly[i];
    const RealPoint& b = poly[(i + 1) % n];
    const double side = cross(b - a, p - a);
    if (a.y <= p.y) {
      if (b.y > p.y && side > 0) ++wn;
    } else {
      if (b.y <= p.y && side < 0) --wn;
    }
  }
  return wn != 0;
}

}  // namespace krinkle
