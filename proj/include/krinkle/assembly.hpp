#pragma once

/**
 * @file assembly.hpp
 * @brief Wedge assembly and plane tiling.
 *
 * A wedge is a triangular half-lattice of prototile copies in one
 * orientation: tile (r, c) starts at r*d0 + c*d1 for 0 <= c <= r, where d0
 * is the row shift (the sum of one period of lower-boundary steps) and
 * d1 = v_k - v_0 the in-row shift. Wedges 1..w-1 are rotated copies placed
 * against the evolving front; the closure motions (t rotations, or identity
 * plus a half-turn in the offset case) replicate the fundamental region to
 * cover the plane. Placement stays lattice-exact throughout: the half-turn
 * about (1/2, 0) composes with a lattice motion into rotation by n/2 plus
 * the translation e_0 - tau.
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "krinkle/geometry.hpp"
#include "krinkle/prototile.hpp"
#include "krinkle/sequences.hpp"
#include "krinkle/spatial_index.hpp"

namespace krinkle {

struct PlacedTile {
  int wedge_index = 0;  // global wedge label in [0, n)
  int row = 0;
  int col = 0;
  RigidMotion motion;  // pure lattice: rotation index + translation
  int closure_copy = 0;
};

struct Wedge {
  int index = 0;  // fundamental wedge label in [0, w)
  RigidMotion origin_motion;
  std::vector<PlacedTile> tiles;  // ordered by (row, col)
  LatticePoint d0;                // row shift, rotated into this wedge frame
  LatticePoint d1;                // in-row shift, rotated into this wedge frame
  DirectionSequence lower_boundary;  // (l^i_j), period k
  DirectionSequence upper_boundary;  // (u^i_j), period k
};

struct Tiling {
  Params params;
  Prototile prototile;
  std::vector<Wedge> wedges;               // w entries
  DirectionSequence base;                  // (b_j) = (l^0_j)
  std::vector<DirectionSequence> fronts;   // f^0 .. f^{w-1}
  std::vector<RigidMotion> closure_motions;
  int rows = 0;
};

/// d0 for wedge 0: the sum of one period of lower-boundary unit steps.
inline LatticePoint row_shift(const Params& params) {
  LatticePoint d0 = LatticePoint::zero(params.n);
  for (int v : progression_terms(params.m, params.k, static_cast<std::size_t>(params.k)))
    d0.coeffs[static_cast<std::size_t>(v)] += 1;
  return d0;
}

/// d1 for wedge 0: v_k - v_0.
inline LatticePoint in_row_shift(const Params& params) {
  return LatticePoint::unit(params.k, params.n) - LatticePoint::unit(0, params.n);
}

/// The front after wedge 0: the periodic upper boundary (u^0_j).
inline DirectionSequence initial_front(const Params& params) {
  std::vector<int> period =
      progression_terms(params.m, params.k, static_cast<std::size_t>(params.k));
  period[0] = params.k;
  return DirectionSequence::periodic(std::move(period));
}

/**
 * Start point of wedge i: walk the previous front for j* steps, where j* is
 * the minimal index with front term i. The closed form j* = i * m^{-1} mod k
 * is cross-checked against a linear scan of one period.
 */
inline LatticePoint wedge_start_position(const Params& params, int i,
                                         const DirectionSequence& front_prev) {
  if (i < 1) throw std::invalid_argument("wedge start positions apply to wedges i >= 1");
  const int j_star = alignment_index(i, params.m, params.k);
  int scanned = -1;
  for (int j = 0; j < params.k; ++j) {
    if (front_prev.term(static_cast<std::size_t>(j)) == i) {
      scanned = j;
      break;
    }
  }
  if (scanned < 0)
    throw std::logic_error("front has no edge in direction " + std::to_string(i) +
                           " within one period");
  if (scanned != j_star)
    throw std::logic_error("alignment index mismatch: formula " + std::to_string(j_star) +
                           ", scan " + std::to_string(scanned));
  LatticePoint start = LatticePoint::zero(params.n);
  for (int j = 0; j < j_star; ++j)
    start.coeffs[static_cast<std::size_t>(front_prev.term(static_cast<std::size_t>(j)))] += 1;
  return start;
}

/// Replace every front term equal to i with i + k. The result is the front
/// after placing wedge i.
inline DirectionSequence advance_front(const DirectionSequence& front_prev, int i, int k) {
  DirectionSequence next = front_prev;
  bool found = false;
  auto replace = [&](std::vector<int>& terms) {
    for (int& v : terms) {
      if (v < i || v >= i + k)
        throw std::invalid_argument("front term " + std::to_string(v) +
                                    " violates the level-" + std::to_string(i) + " range");
      if (v == i) {
        v += k;
        found = true;
      }
    }
  };
  replace(next.prefix);
  replace(next.period);
  if (!found && next.is_finite())
    throw std::invalid_argument("front contains no term equal to " + std::to_string(i));
  return next;
}

namespace detail {

inline Wedge build_wedge_at(const Params& params, int i, int rows, const LatticePoint& origin) {
  if (i < 0 || i >= params.n) throw std::invalid_argument("wedge index out of [0, n)");
  if (rows < 1) throw std::invalid_argument("row budget must be at least 1");
  Wedge wedge;
  wedge.index = i;
  wedge.origin_motion = RigidMotion{i, origin, std::nullopt};
  wedge.d0 = row_shift(params).rotated(i);
  wedge.d1 = in_row_shift(params).rotated(i);

  std::vector<int> lower =
      progression_terms(params.m, params.k, static_cast<std::size_t>(params.k));
  std::vector<int> upper = lower;
  upper[0] = params.k;
  for (int& v : lower) v += i;
  for (int& v : upper) v += i;
  wedge.lower_boundary = DirectionSequence::periodic(std::move(lower));
  wedge.upper_boundary = DirectionSequence::periodic(std::move(upper));

  wedge.tiles.reserve(static_cast<std::size_t>(rows) * (static_cast<std::size_t>(rows) + 1) / 2);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c <= r; ++c) {
      PlacedTile tile;
      tile.wedge_index = i;
      tile.row = r;
      tile.col = c;
      tile.motion = RigidMotion{i, origin + wedge.d0 * r + wedge.d1 * c, std::nullopt};
      tile.closure_copy = 0;
      wedge.tiles.push_back(std::move(tile));
    }
  }
  return wedge;
}

}  // namespace detail

/// Standalone wedge builder; recovers the wedge origin by chaining fronts.
inline Wedge build_wedge(const Params& params, int i, int rows) {
  LatticePoint origin = LatticePoint::zero(params.n);
  if (i >= 1) {
    DirectionSequence front = initial_front(params);
    for (int level = 1; level < i; ++level) front = advance_front(front, level, params.k);
    origin = wedge_start_position(params, i, front);
  }
  return detail::build_wedge_at(params, i, rows, origin);
}

inline Tiling build_tiling(const Params& params, int rows) {
  if (rows < 1) throw std::invalid_argument("row budget must be at least 1");
  Tiling tiling;
  tiling.params = params;
  tiling.rows = rows;
  tiling.prototile = build_prototile(params);
  tiling.base = shifted_progression_periodic(params.m, params.k, 0);

  DirectionSequence front = initial_front(params);
  if (front != shifted_progression_periodic(params.m, params.k, 1))
    throw std::logic_error("initial front does not equal the level-1 shifted progression");

  tiling.wedges.reserve(static_cast<std::size_t>(params.w));
  tiling.fronts.reserve(static_cast<std::size_t>(params.w));
  tiling.wedges.push_back(detail::build_wedge_at(params, 0, rows, LatticePoint::zero(params.n)));
  tiling.fronts.push_back(front);
  for (int i = 1; i < params.w; ++i) {
    const LatticePoint origin = wedge_start_position(params, i, front);
    tiling.wedges.push_back(detail::build_wedge_at(params, i, rows, origin));
    front = advance_front(front, i, params.k);
    tiling.fronts.push_back(front);
  }

  if (!params.offset) {
    for (int q = 0; q < params.t; ++q)
      tiling.closure_motions.push_back(RigidMotion::rotation(q * params.k, params.n));
  } else {
    tiling.closure_motions.push_back(RigidMotion::identity(params.n));
    tiling.closure_motions.push_back(RigidMotion::half_turn(RealPoint{0.5, 0.0}, params.n));
  }
  return tiling;
}

inline int closure_copies(const Params& params) { return params.offset ? 2 : params.t; }

/**
 * Image of a fundamental-region tile under closure copy q. Rotation copies
 * rotate the motion; the offset half-turn about (1/2, 0) composes into the
 * lattice motion (rotation + n/2, translation e_0 - tau).
 */
inline PlacedTile closure_image(const Params& params, const PlacedTile& tile, int q) {
  if (q == 0) return tile;
  PlacedTile out = tile;
  out.closure_copy = q;
  if (!params.offset) {
    const int shift = q * params.k;
    out.wedge_index = (tile.wedge_index + shift) % params.n;
    out.motion.rotation_index = (tile.motion.rotation_index + shift) % params.n;
    out.motion.translation = tile.motion.translation.rotated(shift);
  } else {
    const int half = params.n / 2;
    out.wedge_index = (tile.wedge_index + half) % params.n;
    out.motion.rotation_index = (tile.motion.rotation_index + half) % params.n;
    out.motion.translation = LatticePoint::unit(0, params.n) - tile.motion.translation;
  }
  return out;
}

/// Every placed tile, in the deterministic order (closure_copy, wedge, r, c).
inline std::vector<PlacedTile> all_tiles(const Tiling& tiling) {
  std::vector<PlacedTile> out;
  const int copies = closure_copies(tiling.params);
  out.reserve(static_cast<std::size_t>(copies) * static_cast<std::size_t>(tiling.params.w) *
              tiling.wedges.front().tiles.size());
  for (int q = 0; q < copies; ++q) {
    for (const Wedge& wedge : tiling.wedges) {
      for (const PlacedTile& tile : wedge.tiles)
        out.push_back(closure_image(tiling.params, tile, q));
    }
  }
  return out;
}

inline std::vector<LatticePoint> tile_vertices(const Tiling& tiling, const PlacedTile& tile) {
  std::vector<LatticePoint> out;
  out.reserve(tiling.prototile.boundary.size());
  for (const LatticePoint& v : tiling.prototile.boundary)
    out.push_back(apply_motion(tile.motion, v));
  return out;
}

inline std::vector<RealPoint> tile_polygon(const Tiling& tiling, const PlacedTile& tile) {
  std::vector<RealPoint> out;
  out.reserve(tiling.prototile.boundary.size());
  for (const LatticePoint& v : tiling.prototile.boundary)
    out.push_back(project(apply_motion(tile.motion, v)));
  return out;
}

struct WindowResult {
  std::vector<PlacedTile> tiles;
  double radius = 0.0;
  double enclosed_radius = 0.0;  // distance from origin to the nearest free edge
  bool covers_radius = false;    // row budget reached past the requested radius
};

/**
 * Tiles whose projected bounding box meets the disk of the given radius.
 * Edges used by exactly one selected tile are free edges; the disk is fully
 * covered iff every free edge lies beyond the radius, so covers_radius
 * doubles as the row-budget adequacy check.
 */
inline WindowResult tiles_in_window(const Tiling& tiling, int rows, double radius) {
  if (radius <= 0.0) throw std::invalid_argument("window radius must be positive");
  if (rows < 1 || rows > tiling.rows)
    throw std::invalid_argument("row budget outside the built tiling's budget");

  WindowResult result;
  result.radius = radius;
  std::vector<std::vector<RealPoint>> kept_polys;
  for (const PlacedTile& tile : all_tiles(tiling)) {
    if (tile.row >= rows) continue;
    std::vector<RealPoint> poly = tile_polygon(tiling, tile);
    double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
    double max_x = -min_x, max_y = -min_x;
    for (const RealPoint& p : poly) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
    const double cx = std::clamp(0.0, min_x, max_x);
    const double cy = std::clamp(0.0, min_y, max_y);
    if (std::hypot(cx, cy) <= radius) {
      result.tiles.push_back(tile);
      kept_polys.push_back(std::move(poly));
    }
  }

  PointIndex points;
  std::unordered_map<std::uint64_t, int> edge_count;
  std::unordered_map<std::uint64_t, std::pair<RealPoint, RealPoint>> edge_rep;
  for (const std::vector<RealPoint>& poly : kept_polys) {
    const std::size_t v = poly.size();
    for (std::size_t e = 0; e < v; ++e) {
      const RealPoint& a = poly[e];
      const RealPoint& b = poly[(e + 1) % v];
      const int ia = points.id_of(a);
      const int ib = points.id_of(b);
      const std::uint64_t key =
          (static_cast<std::uint64_t>(std::min(ia, ib)) << 32) |
          static_cast<std::uint64_t>(std::max(ia, ib));
      if (++edge_count[key] == 1) edge_rep[key] = {a, b};
    }
  }
  double enclosed = std::numeric_limits<double>::infinity();
  for (const auto& [key, count] : edge_count) {
    if (count != 1) continue;
    const auto& [a, b] = edge_rep[key];
    enclosed = std::min(enclosed, point_segment_distance(RealPoint{0.0, 0.0}, a, b));
  }
  result.enclosed_radius = enclosed;
  result.covers_radius = !result.tiles.empty() && enclosed > radius;
  return result;
}

}  // namespace krinkle
