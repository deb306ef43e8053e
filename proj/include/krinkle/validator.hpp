#pragma once

/**
 * @file validator.hpp
 * @brief Executable checks for the tiling's correctness claims.
 *
 * Two layers: exact integer checks on the sequence identities (the
 * characterization condition, the front evolution, the closure identities,
 * and the alignment of wedge boundaries with fronts), and windowed
 * geometric checks on a realized tile set (edge matching, vertex angle
 * sums, and sampled coverage). Sequence checks have no tolerance at all;
 * geometric checks share the global kEps.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "krinkle/assembly.hpp"
#include "krinkle/geometry.hpp"
#include "krinkle/json_writer.hpp"
#include "krinkle/prototile.hpp"
#include "krinkle/sequences.hpp"
#include "krinkle/spatial_index.hpp"

namespace krinkle {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  Params params;
  double radius = 0.0;
  int rows = 0;
  long long samples = 0;
  std::uint64_t seed = 0;
  std::size_t horizon = 0;
  double tolerance = kEps;
  std::vector<CheckResult> checks;

  void add(CheckResult c) { checks.push_back(std::move(c)); }

  bool all_passed() const {
    for (const CheckResult& c : checks)
      if (!c.passed) return false;
    return true;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "modulo krinkle validation report\n";
    os << "params: m=" << params.m << " k=" << params.k << " t=" << params.t
       << " n=" << params.n << " offset=" << (params.offset ? "yes" : "no")
       << " w=" << params.w << "\n";
    os << "window: radius=" << radius << " rows=" << rows << " samples=" << samples
       << " seed=" << seed << " horizon=" << horizon << " tolerance=" << tolerance << "\n";
    for (const CheckResult& c : checks)
      os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " - " << c.detail << "\n";
    os << "result: " << (all_passed() ? "PASS" : "FAIL") << " (" << checks.size()
       << " checks)\n";
    return os.str();
  }

  std::string to_json() const {
    JsonWriter w;
    w.begin_object();
    w.key("params");
    w.begin_object();
    w.key("m"); w.value(params.m);
    w.key("k"); w.value(params.k);
    w.key("t"); w.value(params.t);
    w.key("n"); w.value(params.n);
    w.key("offset"); w.value(params.offset);
    w.key("w"); w.value(params.w);
    w.end_object();
    w.key("radius"); w.value(radius);
    w.key("rows"); w.value(rows);
    w.key("samples"); w.value(static_cast<std::int64_t>(samples));
    w.key("seed"); w.value(static_cast<std::int64_t>(seed));
    w.key("horizon"); w.value(static_cast<std::int64_t>(horizon));
    w.key("tolerance"); w.value(tolerance);
    w.key("all_passed"); w.value(all_passed());
    w.key("checks");
    w.begin_array();
    for (const CheckResult& c : checks) {
      w.begin_object();
      w.key("name"); w.value(c.name);
      w.key("passed"); w.value(c.passed);
      w.key("detail"); w.value(c.detail);
      w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str();
  }
};

// ---------------------------------------------------------------------------
// Exact sequence checks
// ---------------------------------------------------------------------------

/**
 * Integer-exact identity suite over [0, horizon): the characterization
 * condition for shifted progressions and wedge lower boundaries, the front
 * evolution, the closure identity for the active offset mode, the
 * multiple-of-k relation between s^i and s^0, closure of the condition
 * under truncation and constant shift, and the closed-form alignment index
 * against a linear scan. The optional corruption hook flips one front term
 * before comparison and exists for negative-control runs.
 */
inline std::vector<CheckResult> check_sequence_identities(
    const Params& params, std::size_t horizon,
    std::optional<std::pair<int, std::size_t>> corrupt_front = std::nullopt) {
  const int m = params.m, k = params.k, w = params.w;
  const std::size_t kk = static_cast<std::size_t>(k);
  if (horizon < 10 * kk)
    throw std::invalid_argument("sequence-identity horizon must be at least 10k");
  std::vector<CheckResult> out;

  {
    CheckResult c{"condition_c_shifted", true, ""};
    for (int i = 0; i <= w; ++i) {
      auto v = condition_c_violation(shifted_progression_periodic(m, k, i), i, m, k, horizon);
      if (v) {
        c.passed = false;
        c.detail = "s^" + std::to_string(i) + ": " + v->message;
        break;
      }
    }
    if (c.passed)
      c.detail = "C(i) holds for s^i, i = 0.." + std::to_string(w) + ", horizon " +
                 std::to_string(horizon);
    out.push_back(std::move(c));
  }

  {
    CheckResult c{"condition_c_lower", true, ""};
    const std::vector<int> base = progression_terms(m, k, kk);
    for (int i = 0; i <= w; ++i) {
      std::vector<int> period = base;
      for (int& v : period) v += i;
      auto v = condition_c_violation(DirectionSequence::periodic(period), i, m, k, horizon);
      if (v) {
        c.passed = false;
        c.detail = "l^" + std::to_string(i) + ": " + v->message;
        break;
      }
    }
    if (c.passed)
      c.detail = "C(i) holds for the wedge lower boundaries l^i, i = 0.." + std::to_string(w);
    out.push_back(std::move(c));
  }

  DirectionSequence last_front = initial_front(params);
  {
    CheckResult c{"front_identity", true, ""};
    DirectionSequence front = initial_front(params);
    for (int i = 0; i < w && c.passed; ++i) {
      std::vector<int> got = front.take(horizon);
      if (corrupt_front && corrupt_front->first == i && corrupt_front->second < horizon)
        got[corrupt_front->second] += 1;
      const std::vector<int> expect = shifted_progression(m, k, i + 1, horizon).prefix;
      for (std::size_t j = 0; j < horizon; ++j) {
        if (got[j] != expect[j]) {
          c.passed = false;
          c.detail = "front f^" + std::to_string(i) + " term " + std::to_string(j) + " = " +
                     std::to_string(got[j]) + ", expected s^" + std::to_string(i + 1) +
                     " term " + std::to_string(expect[j]);
          break;
        }
      }
      if (i + 1 < w) front = advance_front(front, i + 1, k);
    }
    last_front = front;
    if (c.passed)
      c.detail = "f^i = s^{i+1} termwise for i = 0.." + std::to_string(w - 1) + ", horizon " +
                 std::to_string(horizon);
    out.push_back(std::move(c));
  }

  {
    CheckResult c{"closure_identity", true, ""};
    const DirectionSequence base = shifted_progression_periodic(m, k, 0);
    if (!params.offset) {
      for (std::size_t j = 0; j < horizon; ++j) {
        if (last_front.term(j) != base.term(j) + k) {
          c.passed = false;
          c.detail = "f^{k-1} term " + std::to_string(j) + " != b_j + k";
          break;
        }
      }
      if (c.passed) c.detail = "f^{k-1} = b + k exactly (t-fold rotational closure)";
    } else {
      const int half = params.n / 2;
      if (last_front.term(0) != params.t * k) {
        c.passed = false;
        c.detail = "first front term " + std::to_string(last_front.term(0)) + " != t*k = " +
                   std::to_string(params.t * k);
      }
      for (std::size_t j = 0; c.passed && j < horizon; ++j) {
        if (last_front.term(j) != base.term(j + 1) + half) {
          c.passed = false;
          c.detail = "f^{w-1} term " + std::to_string(j) + " != b_{j+1} + n/2";
          break;
        }
      }
      if (c.passed)
        c.detail = "f^{w-1} = truncated base + n/2 exactly, first term t*k = " +
                   std::to_string(params.t * k) + " (half-turn closure)";
    }
    out.push_back(std::move(c));
  }

  {
    CheckResult c{"multiple_of_k_shift", true, ""};
    const std::vector<int> s0 = progression_terms(m, k, horizon);
    for (int i = 0; i <= w && c.passed; ++i) {
      const std::vector<int> si = shifted_progression(m, k, i, horizon).prefix;
      for (std::size_t j = 0; j < horizon; ++j) {
        const int d = si[j] - s0[j];
        if (d < 0 || d % k != 0) {
          c.passed = false;
          c.detail = "s^" + std::to_string(i) + " - s^0 not a nonnegative multiple of k at " +
                     std::to_string(j);
          break;
        }
      }
    }
    if (c.passed) c.detail = "s^i - s^0 is a nonnegative multiple of k for i = 0.." +
                             std::to_string(w);
    out.push_back(std::move(c));
  }

  {
    CheckResult c{"drop_and_shift_closure", true, ""};
    const int shift_by = 3;
    for (int i : {0, 1, w / 2, w}) {
      const std::vector<int> period = shifted_period(m, k, i);
      std::vector<int> dropped = period;
      std::rotate(dropped.begin(), dropped.begin() + 1, dropped.end());
      if (!satisfies_condition_c(DirectionSequence::periodic(dropped), i, m, k, horizon)) {
        c.passed = false;
        c.detail = "dropping the first term of s^" + std::to_string(i) + " broke C(i)";
        break;
      }
      std::vector<int> shifted = period;
      for (int& v : shifted) v += shift_by;
      if (!satisfies_condition_c(DirectionSequence::periodic(shifted), i + shift_by, m, k,
                                 horizon)) {
        c.passed = false;
        c.detail = "adding " + std::to_string(shift_by) + " to s^" + std::to_string(i) +
                   " did not yield C(i+" + std::to_string(shift_by) + ")";
        break;
      }
    }
    if (c.passed) c.detail = "C closed under truncation and constant shift on sampled levels";
    out.push_back(std::move(c));
  }

  {
    CheckResult c{"alignment_index_scan", true, ""};
    for (int i = 1; i <= w; ++i) {
      const int formula = alignment_index(i, m, k);
      const std::vector<int> period = shifted_period(m, k, i);
      int scanned = -1;
      for (int j = 0; j < k; ++j) {
        if (period[static_cast<std::size_t>(j)] == i) {
          scanned = j;
          break;
        }
      }
      if (scanned != formula) {
        c.passed = false;
        c.detail = "j* mismatch at i = " + std::to_string(i) + ": formula " +
                   std::to_string(formula) + ", scan " + std::to_string(scanned);
        break;
      }
    }
    if (c.passed) c.detail = "j* = i*m^{-1} mod k matches linear scan for i = 1.." +
                             std::to_string(w);
    out.push_back(std::move(c));
  }

  return out;
}

/// Exact coefficient-space check that each wedge's lower boundary path,
/// started at its start position, retraces the previous front from j* on.
inline CheckResult check_lattice_alignment(const Params& params, int span_periods = 3) {
  CheckResult c{"lattice_alignment", true, ""};
  const int k = params.k;
  const std::size_t edges = static_cast<std::size_t>(span_periods) * static_cast<std::size_t>(k);
  DirectionSequence front = initial_front(params);
  for (int i = 1; i < params.w && c.passed; ++i) {
    const int j_star = alignment_index(i, params.m, k);
    const LatticePoint start = wedge_start_position(params, i, front);
    const std::vector<int> front_dirs = front.take(static_cast<std::size_t>(j_star) + edges);
    const std::vector<LatticePoint> front_path =
        trace_path(LatticePoint::zero(params.n), front_dirs);

    std::vector<int> lower = progression_terms(params.m, k, static_cast<std::size_t>(k));
    for (int& v : lower) v += i;
    const std::vector<int> lower_dirs =
        DirectionSequence::periodic(lower).take(edges);
    const std::vector<LatticePoint> wedge_path = trace_path(start, lower_dirs);

    for (std::size_t d = 0; d <= edges; ++d) {
      if (wedge_path[d] != front_path[static_cast<std::size_t>(j_star) + d]) {
        c.passed = false;
        c.detail = "wedge " + std::to_string(i) + " lower boundary diverges from the front at step " +
                   std::to_string(d);
        break;
      }
    }
    front = advance_front(front, i, k);
  }
  if (c.passed)
    c.detail = "wedge lower boundaries retrace the previous front over " +
               std::to_string(edges) + " edges, wedges 1.." + std::to_string(params.w - 1);
  return c;
}

// ---------------------------------------------------------------------------
// Windowed geometric checks
// ---------------------------------------------------------------------------

struct TileSet {
  std::vector<PlacedTile> tiles;
  std::vector<std::vector<RealPoint>> polys;
};

inline TileSet make_tile_set(const Tiling& tiling, std::vector<PlacedTile> tiles) {
  TileSet set;
  set.polys.reserve(tiles.size());
  for (const PlacedTile& t : tiles) set.polys.push_back(tile_polygon(tiling, t));
  set.tiles = std::move(tiles);
  return set;
}

/// Canonical vertex ids, the edge incidence map, and the free-edge
/// enclosure radius for one tile set.
class GeometryIndex {
 public:
  struct EdgeUse {
    int tile = 0;
    bool min_to_max = false;  // traversal order relative to sorted endpoint ids
  };

  explicit GeometryIndex(const TileSet& set) : set_(&set) {
    poly_ids_.reserve(set.polys.size());
    for (std::size_t t = 0; t < set.polys.size(); ++t) {
      const std::vector<RealPoint>& poly = set.polys[t];
      std::vector<int> ids;
      ids.reserve(poly.size());
      for (const RealPoint& p : poly) ids.push_back(points_.id_of(p));
      for (std::size_t e = 0; e < ids.size(); ++e) {
        const int ia = ids[e];
        const int ib = ids[(e + 1) % ids.size()];
        edges_[edge_key(ia, ib)].push_back(
            EdgeUse{static_cast<int>(t), ia < ib});
      }
      poly_ids_.push_back(std::move(ids));
    }
    enclosed_radius_ = std::numeric_limits<double>::infinity();
    for (const auto& [key, uses] : edges_) {
      if (uses.size() != 1) continue;
      const auto [a, b] = edge_endpoints(key);
      enclosed_radius_ =
          std::min(enclosed_radius_, point_segment_distance(RealPoint{0.0, 0.0}, a, b));
    }
  }

  static std::uint64_t edge_key(int ia, int ib) {
    return (static_cast<std::uint64_t>(std::min(ia, ib)) << 32) |
           static_cast<std::uint64_t>(std::max(ia, ib));
  }

  std::pair<RealPoint, RealPoint> edge_endpoints(std::uint64_t key) const {
    return {points_.point(static_cast<int>(key >> 32)),
            points_.point(static_cast<int>(key & 0xffffffffu))};
  }

  const PointIndex& points() const { return points_; }
  const std::unordered_map<std::uint64_t, std::vector<EdgeUse>>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& poly_ids() const { return poly_ids_; }
  const TileSet& tile_set() const { return *set_; }
  double enclosed_radius() const { return enclosed_radius_; }

 private:
  const TileSet* set_;
  PointIndex points_;
  std::vector<std::vector<int>> poly_ids_;
  std::unordered_map<std::uint64_t, std::vector<EdgeUse>> edges_;
  double enclosed_radius_ = 0.0;
};

/// Distinct projected vertices must sit far apart relative to the merge
/// tolerance, which certifies the quantized identification itself.
inline CheckResult check_vertex_separation(const GeometryIndex& gi) {
  CheckResult c{"vertex_separation", gi.points().separation_ok(), ""};
  std::ostringstream os;
  os << gi.points().size() << " distinct vertices";
  const double d = gi.points().closest_distinct_pair();
  if (std::isfinite(d))
    os << ", closest distinct pair " << d;
  else
    os << ", no distinct pair within " << gi.points().min_separation();
  if (!c.passed) os << " (below the required " << gi.points().min_separation() << ")";
  c.detail = os.str();
  return c;
}

/// Every edge strictly inside the window must be shared by exactly two
/// tiles traversing it in opposite directions.
inline CheckResult check_edge_matching(const GeometryIndex& gi, double radius) {
  CheckResult c{"edge_matching", true, ""};
  long long interior = 0, unmatched = 0, overshared = 0, misoriented = 0;
  std::string first_failure;
  for (const auto& [key, uses] : gi.edges()) {
    const auto [a, b] = gi.edge_endpoints(key);
    if (std::max(norm(a), norm(b)) > radius - kEps) continue;  // crosses or exits the window
    ++interior;
    bool bad = false;
    if (uses.size() == 1) {
      ++unmatched;
      bad = true;
    } else if (uses.size() > 2) {
      ++overshared;
      bad = true;
    } else if (uses[0].min_to_max == uses[1].min_to_max) {
      ++misoriented;
      bad = true;
    }
    if (bad && first_failure.empty()) {
      std::ostringstream os;
      os << "edge (" << a.x << ", " << a.y << ")-(" << b.x << ", " << b.y << ") used by "
         << uses.size() << " tile(s)";
      first_failure = os.str();
    }
  }
  c.passed = unmatched == 0 && overshared == 0 && misoriented == 0;
  std::ostringstream os;
  os << interior << " interior edges";
  if (c.passed) {
    os << ", each shared by exactly 2 tiles with opposite orientations";
  } else {
    os << ", " << unmatched << " unmatched, " << overshared << " shared by >2 tiles, "
       << misoriented << " orientation clashes; first: " << first_failure;
  }
  c.detail = os.str();
  return c;
}

/// Interior angles of the tiles incident to each interior vertex must sum
/// to a full turn.
inline CheckResult check_vertex_angles(const GeometryIndex& gi, double radius,
                                       double tolerance = kEps) {
  CheckResult c{"vertex_angles", true, ""};
  std::unordered_map<int, double> angle_sum;
  const TileSet& set = gi.tile_set();
  for (std::size_t t = 0; t < set.polys.size(); ++t) {
    const std::vector<RealPoint>& poly = set.polys[t];
    const std::vector<int>& ids = gi.poly_ids()[t];
    const std::size_t v = poly.size();
    for (std::size_t j = 0; j < v; ++j) {
      const double angle =
          interior_angle(poly[(j + v - 1) % v], poly[j], poly[(j + 1) % v]);
      angle_sum[ids[j]] += angle;
    }
  }
  long long interior = 0, failures = 0;
  double worst = 0.0;
  std::string first_failure;
  for (const auto& [id, sum] : angle_sum) {
    const RealPoint p = gi.points().point(id);
    if (norm(p) > radius - kEps) continue;
    ++interior;
    const double dev = std::abs(sum - 2.0 * std::numbers::pi);
    worst = std::max(worst, dev);
    if (dev > tolerance) {
      ++failures;
      if (first_failure.empty()) {
        std::ostringstream os;
        os << "vertex (" << p.x << ", " << p.y << ") angle sum off by " << (sum - 2.0 * std::numbers::pi);
        first_failure = os.str();
      }
    }
  }
  c.passed = failures == 0;
  std::ostringstream os;
  os << interior << " interior vertices, worst angle-sum deviation " << worst;
  if (!c.passed) os << "; " << failures << " failures; first: " << first_failure;
  c.detail = os.str();
  return c;
}

inline double halton(std::uint64_t index, int base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % static_cast<std::uint64_t>(base));
    index /= static_cast<std::uint64_t>(base);
  }
  return r;
}

/// Deterministic low-discrepancy coverage test: every sampled point of the
/// disk farther than kEps from all edges must lie in exactly one tile.
inline CheckResult check_coverage(const GeometryIndex& gi, double radius, long long samples,
                                  std::uint64_t seed = 1) {
  CheckResult c{"coverage", true, ""};
  if (samples < 1) throw std::invalid_argument("coverage needs at least one sample");
  const TileSet& set = gi.tile_set();

  // Bucket tiles by bounding box on a unit grid.
  struct Bucket {
    std::vector<int> tiles;
  };
  std::unordered_map<std::int64_t, Bucket> grid;
  auto cell_key = [](long long x, long long y) {
    return static_cast<std::int64_t>(x * 2000003LL + y);
  };
  std::vector<std::array<double, 4>> boxes(set.polys.size());
  for (std::size_t t = 0; t < set.polys.size(); ++t) {
    double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
    double max_x = -min_x, max_y = -min_x;
    for (const RealPoint& p : set.polys[t]) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
    boxes[t] = {min_x, min_y, max_x, max_y};
    for (long long x = static_cast<long long>(std::floor(min_x)); x <= static_cast<long long>(std::floor(max_x)); ++x)
      for (long long y = static_cast<long long>(std::floor(min_y)); y <= static_cast<long long>(std::floor(max_y)); ++y)
        grid[cell_key(x, y)].tiles.push_back(static_cast<int>(t));
  }

  long long accepted = 0, gaps = 0, overlaps = 0, banded = 0;
  std::string first_failure;
  for (std::uint64_t idx = seed; accepted < samples; ++idx) {
    const RealPoint p{(2.0 * halton(idx, 2) - 1.0) * radius,
                      (2.0 * halton(idx, 3) - 1.0) * radius};
    if (p.x * p.x + p.y * p.y > radius * radius) continue;
    ++accepted;
    auto it = grid.find(cell_key(static_cast<long long>(std::floor(p.x)),
                                 static_cast<long long>(std::floor(p.y))));
    int inside = 0;
    bool near_edge = false;
    if (it != grid.end()) {
      for (int t : it->second.tiles) {
        const auto& box = boxes[static_cast<std::size_t>(t)];
        if (p.x < box[0] - kEps || p.y < box[1] - kEps || p.x > box[2] + kEps ||
            p.y > box[3] + kEps)
          continue;
        const std::vector<RealPoint>& poly = set.polys[static_cast<std::size_t>(t)];
        for (std::size_t e = 0; e < poly.size() && !near_edge; ++e) {
          if (point_segment_distance(p, poly[e], poly[(e + 1) % poly.size()]) <= kEps)
            near_edge = true;
        }
        if (near_edge) break;
        if (polygon_contains(poly, p)) ++inside;
      }
    }
    if (near_edge) {
      ++banded;
      continue;
    }
    if (inside != 1) {
      if (inside == 0) ++gaps;
      else ++overlaps;
      if (first_failure.empty()) {
        std::ostringstream os;
        os << "point (" << p.x << ", " << p.y << ") covered " << inside << " times";
        first_failure = os.str();
      }
    }
  }
  c.passed = gaps == 0 && overlaps == 0;
  std::ostringstream os;
  os << accepted << " samples, " << banded << " within eps of an edge (skipped)";
  if (c.passed) os << ", every other sample covered exactly once";
  else os << ", " << gaps << " gaps, " << overlaps << " overlaps; first: " << first_failure;
  c.detail = os.str();
  return c;
}

// ---------------------------------------------------------------------------
// Orchestration
// ---------------------------------------------------------------------------

struct VerifyOptions {
  double radius = 6.0;
  long long samples = 10000;
  std::size_t horizon = 0;  // 0: use 10k
  int rows = 0;             // 0: grow until the window is enclosed
  std::uint64_t seed = 1;
  std::optional<std::pair<int, std::size_t>> corrupt_front;  // negative-control hook
};

inline void append_geometry_checks(ValidationReport& report, const TileSet& set, double radius,
                                   long long samples, std::uint64_t seed) {
  const GeometryIndex gi(set);
  report.add(check_vertex_separation(gi));
  report.add(check_edge_matching(gi, radius));
  report.add(check_vertex_angles(gi, radius));
  report.add(check_coverage(gi, radius, samples, seed));
}

/// Full parameter-driven verification: exact sequence identities plus the
/// geometric checks on a window of the generated tiling.
inline ValidationReport verify_tiling(const Params& params, const VerifyOptions& options = {}) {
  ValidationReport report;
  report.params = params;
  report.radius = options.radius;
  report.samples = options.samples;
  report.seed = options.seed;
  report.horizon = options.horizon > 0
                       ? std::max(options.horizon, 10 * static_cast<std::size_t>(params.k))
                       : 10 * static_cast<std::size_t>(params.k);

  for (CheckResult& c : check_sequence_identities(params, report.horizon, options.corrupt_front))
    report.add(std::move(c));
  report.add(check_lattice_alignment(params));

  static constexpr int kRowSchedule[] = {2, 3, 4, 6, 8, 11, 16, 22, 32, 45, 64};
  WindowResult window;
  Tiling tiling;
  if (options.rows > 0) {
    report.rows = options.rows;
    tiling = build_tiling(params, options.rows);
    window = tiles_in_window(tiling, options.rows, options.radius);
  } else {
    for (int rows : kRowSchedule) {
      report.rows = rows;
      tiling = build_tiling(params, rows);
      window = tiles_in_window(tiling, rows, options.radius);
      if (window.covers_radius) break;
    }
  }
  {
    CheckResult c{"window_enclosure", window.covers_radius, ""};
    std::ostringstream os;
    os << window.tiles.size() << " tiles, rows " << report.rows << ", free edges at distance "
       << window.enclosed_radius << (window.covers_radius ? " > " : " <= ") << "radius "
       << options.radius;
    c.detail = os.str();
    report.add(std::move(c));
  }
  append_geometry_checks(report, make_tile_set(tiling, window.tiles), options.radius,
                         options.samples, options.seed);
  return report;
}

/// Verification of an externally supplied tile set (e.g. a loaded export).
/// When options.radius is zero the free-edge enclosure radius is used.
inline ValidationReport verify_tile_set(const Params& params, const TileSet& set,
                                        const VerifyOptions& options = {},
                                        std::vector<CheckResult> extra_checks = {}) {
  ValidationReport report;
  report.params = params;
  report.samples = options.samples;
  report.seed = options.seed;
  report.horizon = options.horizon > 0
                       ? std::max(options.horizon, 10 * static_cast<std::size_t>(params.k))
                       : 10 * static_cast<std::size_t>(params.k);

  for (CheckResult& c : check_sequence_identities(params, report.horizon, options.corrupt_front))
    report.add(std::move(c));
  report.add(check_lattice_alignment(params));
  for (CheckResult& c : extra_checks) report.add(std::move(c));

  const GeometryIndex gi(set);
  double radius = options.radius;
  if (radius <= 0.0)
    radius = std::max(0.0, gi.enclosed_radius() - 1e-6);
  report.radius = radius;
  {
    CheckResult c{"window_enclosure", !set.tiles.empty() && gi.enclosed_radius() > radius, ""};
    std::ostringstream os;
    os << set.tiles.size() << " tiles, free edges at distance " << gi.enclosed_radius()
       << (c.passed ? " > " : " <= ") << "radius " << radius;
    c.detail = os.str();
    report.add(std::move(c));
  }
  report.add(check_vertex_separation(gi));
  report.add(check_edge_matching(gi, radius));
  report.add(check_vertex_angles(gi, radius));
  report.add(check_coverage(gi, radius, options.samples, options.seed));
  return report;
}

}  // namespace krinkle
