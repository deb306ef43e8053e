#pragma once

/**
 * @file json_io.hpp
 * @brief Tiling export/import.
 *
 * The export schema is byte-stable across runs on one platform: fixed key
 * order, tiles in the deterministic (closure_copy, wedge, r, c) order, and
 * vertices printed with 12 significant digits. Import reads that schema
 * back, rebuilds every tile from its lattice motion, and cross-checks the
 * stored vertices against the rebuilt ones.
 */

#include <json.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "krinkle/assembly.hpp"
#include "krinkle/json_writer.hpp"
#include "krinkle/validator.hpp"

namespace krinkle {

inline std::string export_json(const Tiling& tiling, const std::vector<PlacedTile>& tiles) {
  JsonWriter w;
  const Params& p = tiling.params;
  w.begin_object();
  w.key("params");
  w.begin_object();
  w.key("m"); w.value(p.m);
  w.key("k"); w.value(p.k);
  w.key("t"); w.value(p.t);
  w.key("n"); w.value(p.n);
  w.key("offset"); w.value(p.offset);
  w.key("w"); w.value(p.w);
  w.end_object();

  w.key("prototile");
  w.begin_object();
  w.key("lower_dirs");
  w.begin_array();
  for (int d : tiling.prototile.lower_dirs) w.value(d);
  w.end_array();
  w.key("upper_dirs");
  w.begin_array();
  for (int d : tiling.prototile.upper_dirs) w.value(d);
  w.end_array();
  w.key("vertices");
  w.begin_array();
  for (const RealPoint& v : tiling.prototile.projected_boundary()) {
    w.begin_array();
    w.value(v.x);
    w.value(v.y);
    w.end_array();
  }
  w.end_array();
  w.end_object();

  w.key("tiles");
  w.begin_array();
  for (const PlacedTile& tile : tiles) {
    w.begin_object();
    w.key("wedge"); w.value(tile.wedge_index);
    w.key("closure_copy"); w.value(tile.closure_copy);
    w.key("r"); w.value(tile.row);
    w.key("c"); w.value(tile.col);
    w.key("rotation_index"); w.value(tile.motion.rotation_index);
    w.key("translation_coeffs");
    w.begin_array();
    for (int c : tile.motion.translation.coeffs) w.value(c);
    w.end_array();
    w.key("vertices");
    w.begin_array();
    for (const RealPoint& v : tile_polygon(tiling, tile)) {
      w.begin_array();
      w.value(v.x);
      w.value(v.y);
      w.end_array();
    }
    w.end_array();
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

struct ImportedTiling {
  Params params;
  Prototile prototile;
  TileSet set;                 // polys rebuilt from the lattice motions
  CheckResult consistency;     // stored vertices & dirs vs the rebuilt ones
};

/// Parses an exported tiling. Structural problems (missing fields, sizes,
/// unresolvable params) throw std::invalid_argument; mere disagreement
/// between stored vertices and rebuilt geometry lands in `consistency`.
inline ImportedTiling import_tiling_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("tiling json does not parse: ") + e.what());
  }
  ImportedTiling imp;
  try {
    const auto& jp = doc.at("params");
    imp.params = Params::from_t(jp.at("m").get<int>(), jp.at("k").get<int>(),
                                jp.at("t").get<int>(), jp.at("offset").get<bool>());
    if (imp.params.n != jp.at("n").get<int>() || imp.params.w != jp.at("w").get<int>())
      throw std::invalid_argument("params block is internally inconsistent");
    imp.prototile = build_prototile(imp.params);

    double worst = 0.0;
    bool dirs_ok =
        doc.at("prototile").at("lower_dirs").get<std::vector<int>>() == imp.prototile.lower_dirs &&
        doc.at("prototile").at("upper_dirs").get<std::vector<int>>() == imp.prototile.upper_dirs;

    const std::size_t boundary_size = imp.prototile.boundary.size();
    for (const auto& jt : doc.at("tiles")) {
      PlacedTile tile;
      tile.wedge_index = jt.at("wedge").get<int>();
      tile.closure_copy = jt.at("closure_copy").get<int>();
      tile.row = jt.at("r").get<int>();
      tile.col = jt.at("c").get<int>();
      tile.motion.rotation_index = jt.at("rotation_index").get<int>();
      const auto coeffs = jt.at("translation_coeffs").get<std::vector<int>>();
      if (coeffs.size() != static_cast<std::size_t>(imp.params.n))
        throw std::invalid_argument("translation_coeffs length differs from n");
      if (tile.motion.rotation_index < 0 || tile.motion.rotation_index >= imp.params.n)
        throw std::invalid_argument("rotation_index out of [0, n)");
      tile.motion.translation.coeffs = coeffs;

      std::vector<RealPoint> poly;
      poly.reserve(boundary_size);
      for (const LatticePoint& v : imp.prototile.boundary)
        poly.push_back(project(apply_motion(tile.motion, v)));

      const auto& jverts = jt.at("vertices");
      if (jverts.size() != boundary_size)
        throw std::invalid_argument("tile vertex count differs from the prototile");
      for (std::size_t j = 0; j < boundary_size; ++j) {
        const RealPoint stored{jverts[j][0].get<double>(), jverts[j][1].get<double>()};
        worst = std::max(worst, distance(stored, poly[j]));
      }
      imp.set.tiles.push_back(std::move(tile));
      imp.set.polys.push_back(std::move(poly));
    }

    imp.consistency.name = "import_consistency";
    imp.consistency.passed = dirs_ok && worst <= kEps;
    std::ostringstream os;
    os << imp.set.tiles.size() << " tiles, stored vertices vs rebuilt motions differ by at most "
       << worst;
    if (!dirs_ok) os << "; prototile direction sequences disagree";
    imp.consistency.detail = os.str();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("tiling json has an invalid structure: ") + e.what());
  }
  return imp;
}

}  // namespace krinkle
