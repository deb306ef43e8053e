#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <string>
#include <vector>

#include "krinkle/json_io.hpp"
#include "krinkle/svg.hpp"

using namespace krinkle;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++count;
  return count;
}

}  // namespace

TEST_CASE("json export is deterministic and schema-complete") {
  const Tiling tiling = build_tiling(Params::from_n(3, 7, 14), 2);
  const std::vector<PlacedTile> tiles = all_tiles(tiling);
  const std::string a = export_json(tiling, tiles);
  const std::string b = export_json(tiling, tiles);
  CHECK(a == b);

  const nlohmann::json doc = nlohmann::json::parse(a);
  CHECK(doc.at("params").at("m") == 3);
  CHECK(doc.at("params").at("k") == 7);
  CHECK(doc.at("params").at("t") == 2);
  CHECK(doc.at("params").at("n") == 14);
  CHECK(doc.at("params").at("offset") == false);
  CHECK(doc.at("params").at("w") == 7);
  CHECK(doc.at("prototile").at("lower_dirs") ==
        nlohmann::json::array({0, 3, 6, 2, 5, 1, 4, 7}));
  CHECK(doc.at("prototile").at("vertices").size() == 16);
  CHECK(doc.at("tiles").size() == tiles.size());
  const auto& first = doc.at("tiles").at(0);
  CHECK(first.at("wedge") == 0);
  CHECK(first.at("closure_copy") == 0);
  CHECK(first.at("r") == 0);
  CHECK(first.at("c") == 0);
  CHECK(first.at("rotation_index") == 0);
  CHECK(first.at("translation_coeffs").size() == 14);
  CHECK(first.at("vertices").size() == 16);
}

TEST_CASE("rows=1 export carries one origin tile per wedge and copy") {
  const Params p = Params::from_n(3, 7, 14);
  const Tiling tiling = build_tiling(p, 1);
  const std::vector<PlacedTile> tiles = all_tiles(tiling);
  CHECK(tiles.size() == 14);  // w * t
  const nlohmann::json doc = nlohmann::json::parse(export_json(tiling, tiles));
  CHECK(doc.at("tiles").size() == 14);
}

TEST_CASE("empty window exports an empty tile list") {
  const Tiling tiling = build_tiling(Params::from_n(3, 7, 14), 1);
  const nlohmann::json doc = nlohmann::json::parse(export_json(tiling, {}));
  CHECK(doc.at("tiles").is_array());
  CHECK(doc.at("tiles").empty());
}

TEST_CASE("import rebuilds tiles and confirms stored vertices") {
  const Params p = Params::from_n(3, 7, 22);
  const Tiling tiling = build_tiling(p, 3);
  const std::string text = export_json(tiling, all_tiles(tiling));
  const ImportedTiling imported = import_tiling_json(text);
  CHECK(imported.params == p);
  CHECK(imported.set.tiles.size() == all_tiles(tiling).size());
  INFO(imported.consistency.detail);
  CHECK(imported.consistency.passed);
}

TEST_CASE("import rejects malformed documents") {
  CHECK_THROWS_AS(import_tiling_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(import_tiling_json("{}"), std::invalid_argument);
  // Inconsistent params block.
  const Tiling tiling = build_tiling(Params::from_n(3, 7, 14), 1);
  nlohmann::json doc = nlohmann::json::parse(export_json(tiling, all_tiles(tiling)));
  doc["params"]["w"] = 9;
  CHECK_THROWS_AS(import_tiling_json(doc.dump()), std::invalid_argument);
}

TEST_CASE("a corrupted stored vertex trips the consistency check") {
  const Tiling tiling = build_tiling(Params::from_n(3, 7, 14), 1);
  nlohmann::json doc = nlohmann::json::parse(export_json(tiling, all_tiles(tiling)));
  doc["tiles"][0]["vertices"][0][0] = doc["tiles"][0]["vertices"][0][0].get<double>() + 0.01;
  const ImportedTiling imported = import_tiling_json(doc.dump());
  CHECK_FALSE(imported.consistency.passed);
}

TEST_CASE("double formatting is pinned to 12 significant digits") {
  CHECK(JsonWriter::format_double(1.0) == "1");
  CHECK(JsonWriter::format_double(0.5) == "0.5");
  CHECK(JsonWriter::format_double(1.0 / 3.0) == "0.333333333333");
  CHECK(JsonWriter::format_double(123456789012345.0) == "1.23456789012e+14");
  CHECK(JsonWriter::format_double(-0.25) == "-0.25");
}

TEST_CASE("json writer emits stable structures") {
  JsonWriter w;
  w.begin_object();
  w.key("a");
  w.value(1);
  w.key("b");
  w.begin_array();
  w.value(true);
  w.value("x\"y");
  w.end_array();
  w.end_object();
  CHECK(w.str() == "{\"a\":1,\"b\":[true,\"x\\\"y\"]}");
}

TEST_CASE("svg export shape and determinism") {
  const Tiling tiling = build_tiling(Params::from_n(2, 5, 10), 2);
  const std::vector<PlacedTile> tiles = all_tiles(tiling);
  RenderStyle style;
  const std::string svg = export_svg(tiling, tiles, style);
  CHECK(svg == export_svg(tiling, tiles, style));
  CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"", 0) == 0);
  CHECK(count_occurrences(svg, "<polygon points=\"") == tiles.size());
  CHECK(count_occurrences(svg, "\"></polygon>") == tiles.size());  // never self-closing
  // Fixed attribute order within each polygon element.
  const std::size_t points = svg.find("points=");
  const std::size_t fill = svg.find("fill=", points);
  const std::size_t stroke = svg.find("stroke=", fill);
  CHECK(points != std::string::npos);
  CHECK(fill != std::string::npos);
  CHECK(stroke != std::string::npos);
}

TEST_CASE("svg styles: uniform fill and zero stroke stay valid") {
  const Tiling tiling = build_tiling(Params::from_n(2, 5, 10), 1);
  RenderStyle style;
  style.scheme = ColorScheme::uniform;
  style.stroke_width = 0.0;
  style.background = "";
  const std::string svg = export_svg(tiling, all_tiles(tiling), style);
  CHECK(count_occurrences(svg, "<polygon points=\"") == all_tiles(tiling).size());
  CHECK(count_occurrences(svg, "fill=\"" + style.uniform_fill + "\"") ==
        all_tiles(tiling).size());
  CHECK(svg.find("<rect") == std::string::npos);
}

TEST_CASE("prototile render labels every edge with its direction") {
  const Params p = Params::from_n(3, 7, 14);
  const Prototile tile = build_prototile(p);
  RenderStyle style;
  style.label_edges = true;
  const std::string svg = export_prototile_svg(tile, style);
  CHECK(count_occurrences(svg, "<text ") == 16);  // 2(k+1) edges
  CHECK(svg.find(">7</text>") != std::string::npos);
  CHECK(svg.find(">0</text>") != std::string::npos);
}
