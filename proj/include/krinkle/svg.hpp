#pragma once

/**
 * @file svg.hpp
 * @brief SVG rendering of tilings and single prototiles.
 *
 * Output is snapshot-friendly: non-self-closing polygon elements, fixed
 * attribute order, fixed number formatting. Coordinates are in edge-length
 * units (y flipped for screen space); the scale only sets the pixel size.
 * The per-wedge color scheme steps the hue around the circle by wedge
 * index i/n, which makes the n-wedge decomposition visible; it is a
 * rendering convention, nothing in the construction depends on it.
 */

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "krinkle/assembly.hpp"
#include "krinkle/prototile.hpp"

namespace krinkle {

enum class ColorScheme { per_wedge, uniform, per_copy };

struct RenderStyle {
  ColorScheme scheme = ColorScheme::per_wedge;
  double stroke_width = 0.03;        // edge-length units
  double scale = 40.0;               // pixels per edge length
  std::string background = "#ffffff";  // empty: no background rect
  std::string stroke_color = "#20242c";
  std::string uniform_fill = "#b8c4d8";
  bool label_edges = false;
};

namespace detail {

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.8g", v);
  return buf;
}

inline std::string hsl_to_hex(double h_deg, double s, double l) {
  const double h = std::fmod(std::fmod(h_deg, 360.0) + 360.0, 360.0) / 60.0;
  const double c = (1.0 - std::abs(2.0 * l - 1.0)) * s;
  const double x = c * (1.0 - std::abs(std::fmod(h, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  if (h < 1) { r = c; g = x; }
  else if (h < 2) { r = x; g = c; }
  else if (h < 3) { g = c; b = x; }
  else if (h < 4) { g = x; b = c; }
  else if (h < 5) { r = x; b = c; }
  else { r = c; b = x; }
  const double m = l - c / 2.0;
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                static_cast<int>(std::lround((r + m) * 255.0)),
                static_cast<int>(std::lround((g + m) * 255.0)),
                static_cast<int>(std::lround((b + m) * 255.0)));
  return buf;
}

struct Box {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();
  void include(const RealPoint& p) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
};

inline std::string svg_open(const Box& box, const RenderStyle& style, std::string& view_tail) {
  const double margin = 0.05 * std::max(box.max_x - box.min_x, box.max_y - box.min_y);
  const double x0 = box.min_x - margin;
  const double y0 = -(box.max_y + margin);  // y flipped
  const double width = (box.max_x - box.min_x) + 2 * margin;
  const double height = (box.max_y - box.min_y) + 2 * margin;
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(x0) + " " +
                    fmt(y0) + " " + fmt(width) + " " + fmt(height) + "\" width=\"" +
                    fmt(width * style.scale) + "\" height=\"" + fmt(height * style.scale) +
                    "\">\n";
  if (!style.background.empty() && style.background != "none") {
    out += "<rect x=\"" + fmt(x0) + "\" y=\"" + fmt(y0) + "\" width=\"" + fmt(width) +
           "\" height=\"" + fmt(height) + "\" fill=\"" + style.background + "\"></rect>\n";
  }
  view_tail = "</svg>\n";
  return out;
}

inline void append_polygon(std::string& out, const std::vector<RealPoint>& poly,
                           const std::string& fill, const RenderStyle& style) {
  out += "<polygon points=\"";
  for (std::size_t j = 0; j < poly.size(); ++j) {
    if (j) out += ' ';
    out += fmt(poly[j].x);
    out += ',';
    out += fmt(-poly[j].y);
  }
  out += "\" fill=\"" + fill + "\" stroke=\"" + style.stroke_color + "\" stroke-width=\"" +
         fmt(style.stroke_width) + "\"></polygon>\n";
}

inline std::string tile_fill(const RenderStyle& style, const Params& params,
                             const PlacedTile& tile) {
  switch (style.scheme) {
    case ColorScheme::per_wedge:
      return hsl_to_hex(360.0 * tile.wedge_index / params.n, 0.55, 0.68);
    case ColorScheme::per_copy:
      return hsl_to_hex(360.0 * tile.closure_copy / closure_copies(params), 0.45, 0.7);
    case ColorScheme::uniform:
    default:
      return style.uniform_fill;
  }
}

}  // namespace detail

inline std::string export_svg(const Tiling& tiling, const std::vector<PlacedTile>& tiles,
                              const RenderStyle& style, double window_radius = 0.0) {
  detail::Box box;
  std::vector<std::vector<RealPoint>> polys;
  polys.reserve(tiles.size());
  for (const PlacedTile& tile : tiles) {
    polys.push_back(tile_polygon(tiling, tile));
    for (const RealPoint& p : polys.back()) box.include(p);
  }
  if (window_radius > 0.0) {
    box = detail::Box{};
    box.include(RealPoint{-window_radius, -window_radius});
    box.include(RealPoint{window_radius, window_radius});
  } else if (polys.empty()) {
    box.include(RealPoint{-1, -1});
    box.include(RealPoint{1, 1});
  }
  std::string tail;
  std::string out = detail::svg_open(box, style, tail);
  for (std::size_t i = 0; i < polys.size(); ++i)
    detail::append_polygon(out, polys[i], detail::tile_fill(style, tiling.params, tiles[i]),
                           style);
  out += tail;
  return out;
}

/// Single-tile render with optional per-edge direction labels, boundary
/// order: lower edges 0..k, then the upper edges reversed.
inline std::string export_prototile_svg(const Prototile& tile, const RenderStyle& style) {
  const std::vector<RealPoint> poly = tile.projected_boundary();
  detail::Box box;
  for (const RealPoint& p : poly) box.include(p);
  std::string tail;
  std::string out = detail::svg_open(box, style, tail);
  detail::append_polygon(out, poly, style.uniform_fill, style);
  if (style.label_edges) {
    const std::size_t k = static_cast<std::size_t>(tile.k);
    std::vector<int> labels(poly.size());
    for (std::size_t e = 0; e <= k; ++e) labels[e] = tile.lower_dirs[e];
    for (std::size_t h = 0; h <= k; ++h) labels[k + 1 + h] = tile.upper_dirs[k - h];
    for (std::size_t e = 0; e < poly.size(); ++e) {
      const RealPoint a = poly[e];
      const RealPoint b = poly[(e + 1) % poly.size()];
      const RealPoint mid = (a + b) * 0.5;
      const RealPoint dir = b - a;
      const double len = norm(dir);
      const RealPoint outward{dir.y / len, -dir.x / len};  // right of CCW travel
      const RealPoint at = mid + outward * 0.22;
      out += "<text x=\"" + detail::fmt(at.x) + "\" y=\"" + detail::fmt(-at.y) +
             "\" font-size=\"0.28\" text-anchor=\"middle\" dominant-baseline=\"middle\" "
             "fill=\"#333333\">" +
             std::to_string(labels[e]) + "</text>\n";
    }
  }
  out += tail;
  return out;
}

}  // namespace krinkle
