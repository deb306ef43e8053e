#pragma once

/**
 * @file prototile.hpp
 * @brief Construction of the canonical prototile.
 *
 * The prototile is the simple 2(k+1)-gon bounded by the lower path (the
 * first k progression terms with k appended) and the reverse of the upper
 * path (the same with first and last elements exchanged). Both paths start
 * at the origin and, being permutations of each other, end at the same
 * lattice point.
 */

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "krinkle/geometry.hpp"
#include "krinkle/sequences.hpp"

namespace krinkle {

struct Prototile {
  int k = 0;
  int n = 0;
  std::vector<int> lower_dirs;  // length k+1, lower_dirs[0] == 0
  std::vector<int> upper_dirs;  // length k+1, upper_dirs[0] == k
  std::vector<LatticePoint> lower_vertices;  // k+2 points, origin to Q
  std::vector<LatticePoint> upper_vertices;  // k+2 points, origin to Q
  std::vector<LatticePoint> boundary;        // 2k+2 vertices, counterclockwise

  // Distinguished unit edges, oriented as traced by their paths.
  std::pair<LatticePoint, LatticePoint> base_edge() const {
    return {lower_vertices[0], lower_vertices[1]};
  }
  std::pair<LatticePoint, LatticePoint> neighbor_edge() const {
    return {upper_vertices[0], upper_vertices[1]};
  }
  std::pair<LatticePoint, LatticePoint> opposite_base_edge() const {
    return {upper_vertices[static_cast<std::size_t>(k)],
            upper_vertices[static_cast<std::size_t>(k) + 1]};
  }
  std::pair<LatticePoint, LatticePoint> opposite_neighbor_edge() const {
    return {lower_vertices[static_cast<std::size_t>(k)],
            lower_vertices[static_cast<std::size_t>(k) + 1]};
  }

  std::vector<RealPoint> projected_boundary() const {
    std::vector<RealPoint> out;
    out.reserve(boundary.size());
    for (const LatticePoint& p : boundary) out.push_back(project(p));
    return out;
  }
};

/// True iff every interior direction d (0 < d < k) has a positive inner
/// product with the half-angle vector (cos k*pi/n, sin k*pi/n).
inline bool interior_direction_check(const Params& params) {
  const double half = std::numbers::pi * static_cast<double>(params.k) /
                      static_cast<double>(params.n);
  const RealPoint ref{std::cos(half), std::sin(half)};
  for (int d = 1; d < params.k; ++d) {
    if (dot(unit_vector(d, params.n), ref) <= 0.0) return false;
  }
  return true;
}

/**
 * Builds the prototile and verifies its defining invariants: exact endpoint
 * agreement of the two paths, counterclockwise orientation, and simplicity.
 * Failures indicate an implementation bug, not a valid parameter regime,
 * and throw std::logic_error.
 */
inline Prototile build_prototile(const Params& params) {
  Prototile tile;
  tile.k = params.k;
  tile.n = params.n;
  tile.lower_dirs = lower_sequence(params.m, params.k).prefix;
  tile.upper_dirs = upper_sequence(params.m, params.k).prefix;

  const LatticePoint origin = LatticePoint::zero(params.n);
  tile.lower_vertices = trace_path(origin, tile.lower_dirs);
  tile.upper_vertices = trace_path(origin, tile.upper_dirs);

  if (tile.lower_vertices.back() != tile.upper_vertices.back())
    throw std::logic_error("prototile paths do not share an endpoint");

  // Boundary: lower path forward, then upper path reversed (endpoint and
  // start point appear once each).
  tile.boundary = tile.lower_vertices;
  for (std::size_t j = tile.upper_vertices.size() - 1; j-- > 1;)
    tile.boundary.push_back(tile.upper_vertices[j]);

  const std::vector<RealPoint> poly = tile.projected_boundary();
  if (!is_simple_polygon(poly))
    throw std::logic_error("prototile boundary is not a simple polygon");
  if (polygon_signed_area(poly) <= 0.0)
    throw std::logic_error("prototile boundary is not counterclockwise");
  return tile;
}

/// Shoelace area of the prototile (positive; every placed copy has the same).
inline double prototile_area(const Params& params) {
  const Prototile tile = build_prototile(params);
  return polygon_signed_area(tile.projected_boundary());
}

}  // namespace krinkle
