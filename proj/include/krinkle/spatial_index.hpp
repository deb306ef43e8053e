#pragma once

/**
 * @file spatial_index.hpp
 * @brief Quantized identification of projected points.
 *
 * Distinct lattice positions can project to the same plane point (e.g.
 * v_i + v_{i+n/2} = 0 for even n), so vertex and edge identification works
 * on projected coordinates: points within the merge tolerance share one
 * canonical id. The index also tracks the closest pair of *distinct*
 * canonical points it has seen, so callers can assert that true
 * coincidences and near-collisions are separated by orders of magnitude
 * instead of assuming it.
 */

#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "krinkle/geometry.hpp"

namespace krinkle {

class PointIndex {
 public:
  explicit PointIndex(double merge_tol = 1e-7, double min_separation = 1e-3)
      : merge_(merge_tol), min_sep_(min_separation) {}

  /// Canonical id of p, merging with any previously seen point within the
  /// merge tolerance.
  int id_of(const RealPoint& p) {
    const Cell fc = cell(p, kFineCell);
    for (long long dx = -1; dx <= 1; ++dx) {
      for (long long dy = -1; dy <= 1; ++dy) {
        auto it = fine_.find(Cell{fc.x + dx, fc.y + dy});
        if (it == fine_.end()) continue;
        for (int id : it->second) {
          if (distance(points_[static_cast<std::size_t>(id)], p) <= merge_) return id;
        }
      }
    }
    const int id = static_cast<int>(points_.size());
    points_.push_back(p);
    fine_[fc].push_back(id);

    const Cell cc = cell(p, coarse_cell());
    for (long long dx = -1; dx <= 1; ++dx) {
      for (long long dy = -1; dy <= 1; ++dy) {
        auto it = coarse_.find(Cell{cc.x + dx, cc.y + dy});
        if (it == coarse_.end()) continue;
        for (int other : it->second) {
          const double d = distance(points_[static_cast<std::size_t>(other)], p);
          if (d < closest_pair_) closest_pair_ = d;
        }
      }
    }
    coarse_[cc].push_back(id);
    return id;
  }

  const RealPoint& point(int id) const { return points_[static_cast<std::size_t>(id)]; }
  int size() const { return static_cast<int>(points_.size()); }

  /// Smallest distance observed between two distinct canonical points
  /// (infinity when every pair is farther than the coarse neighborhood).
  double closest_distinct_pair() const { return closest_pair_; }
  bool separation_ok() const { return closest_pair_ >= min_sep_; }
  double min_separation() const { return min_sep_; }

 private:
  struct Cell {
    long long x = 0;
    long long y = 0;
    bool operator==(const Cell&) const = default;
  };
  struct CellHash {
    std::size_t operator()(const Cell& c) const {
      std::uint64_t h = static_cast<std::uint64_t>(c.x) * 0x9e3779b97f4a7c15ULL;
      h ^= static_cast<std::uint64_t>(c.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };

  static constexpr double kFineCell = 1e-6;
  double coarse_cell() const { return min_sep_; }

  static Cell cell(const RealPoint& p, double size) {
    return Cell{static_cast<long long>(std::floor(p.x / size)),
                static_cast<long long>(std::floor(p.y / size))};
  }

  double merge_;
  double min_sep_;
  double closest_pair_ = std::numeric_limits<double>::infinity();
  std::vector<RealPoint> points_;
  std::unordered_map<Cell, std::vector<int>, CellHash> fine_;
  std::unordered_map<Cell, std::vector<int>, CellHash> coarse_;
};

}  // namespace krinkle
