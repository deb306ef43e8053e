// Command-line front end: construct modulo krinkle tilings, render them to
// SVG, export/import the JSON schema, print the underlying sequences, and
// run the validation suite.
//
// Exit codes: 0 success, 1 a validation check failed, 2 invalid parameters
// or input.

#include <CLI11.hpp>

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "krinkle/assembly.hpp"
#include "krinkle/json_io.hpp"
#include "krinkle/prototile.hpp"
#include "krinkle/sequences.hpp"
#include "krinkle/svg.hpp"
#include "krinkle/validator.hpp"

namespace {

using namespace krinkle;

struct ParamFlags {
  int m = 0;
  int k = 0;
  int n = 0;  // 0: not given
  int t = 0;  // 0: not given
  bool offset_flag = false;
  bool no_offset_flag = false;
};

void add_param_flags(CLI::App* cmd, ParamFlags& f, bool required) {
  auto* m = cmd->add_option("--m", f.m, "multiplier m (0 < m < k, gcd(m, k) = 1)");
  auto* k = cmd->add_option("--k", f.k, "modulus k");
  if (required) {
    m->required();
    k->required();
  }
  cmd->add_option("--n", f.n, "direction count n (resolved to t and the offset mode)");
  cmd->add_option("--t", f.t, "periods t >= 2 (combine with --offset / --no-offset)");
  cmd->add_flag("--offset", f.offset_flag, "use the offset construction, n = 2(t*k - m)");
  cmd->add_flag("--no-offset", f.no_offset_flag, "use the construction without offset, n = t*k");
}

Params resolve_params(const ParamFlags& f) {
  if (f.offset_flag && f.no_offset_flag)
    throw std::invalid_argument("--offset and --no-offset are mutually exclusive");
  std::optional<bool> forced;
  if (f.offset_flag) forced = true;
  if (f.no_offset_flag) forced = false;
  if (f.n == 0 && f.t == 0)
    throw std::invalid_argument("provide --n, or --t with --offset / --no-offset");
  if (f.t != 0) {
    if (!forced)
      throw std::invalid_argument("--t needs an explicit --offset or --no-offset");
    const Params p = Params::from_t(f.m, f.k, f.t, *forced);
    if (f.n != 0 && f.n != p.n)
      throw std::invalid_argument("--n disagrees with --t: the resolved n is " +
                                  std::to_string(p.n));
    return p;
  }
  return Params::from_n(f.m, f.k, f.n, forced);
}

struct StyleFlags {
  std::string color = "wedge";
  RenderStyle style;
};

void add_style_flags(CLI::App* cmd, StyleFlags& s) {
  cmd->add_option("--color", s.color, "color scheme: wedge, uniform, or copy")
      ->check(CLI::IsMember({"wedge", "uniform", "copy"}));
  cmd->add_option("--stroke-width", s.style.stroke_width, "stroke width in edge lengths");
  cmd->add_option("--scale", s.style.scale, "pixels per edge length");
  cmd->add_option("--background", s.style.background, "background color (or 'none')");
}

RenderStyle resolve_style(const StyleFlags& s) {
  RenderStyle style = s.style;
  if (s.color == "uniform") style.scheme = ColorScheme::uniform;
  else if (s.color == "copy") style.scheme = ColorScheme::per_copy;
  else style.scheme = ColorScheme::per_wedge;
  return style;
}

std::string default_stem(const Params& p, const std::string& prefix) {
  return prefix + std::to_string(p.m) + "-" + std::to_string(p.k) + "-" + std::to_string(p.n);
}

std::string strip_known_extension(std::string path) {
  for (const char* ext : {".svg", ".json"}) {
    if (path.size() > std::strlen(ext) &&
        path.compare(path.size() - std::strlen(ext), std::string::npos, ext) == 0)
      return path.substr(0, path.size() - std::strlen(ext));
  }
  return path;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

std::uint64_t sampler_seed() {
  if (const char* env = std::getenv("KRINKLE_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 1;
}

int run_generate(const ParamFlags& pf, const StyleFlags& sf, int rows, double radius,
                 const std::string& out, const std::string& format) {
  const Params params = resolve_params(pf);
  const Tiling tiling = build_tiling(params, rows);
  std::vector<PlacedTile> tiles;
  if (radius > 0.0) {
    const WindowResult window = tiles_in_window(tiling, rows, radius);
    if (!window.covers_radius)
      std::cerr << "warning: row budget " << rows << " does not enclose radius " << radius
                << " (free edges at distance " << window.enclosed_radius << ")\n";
    tiles = window.tiles;
  } else {
    tiles = all_tiles(tiling);
  }

  const std::string stem = strip_known_extension(out.empty() ? default_stem(params, "krinkle-") : out);
  std::cout << "m=" << params.m << " k=" << params.k << " t=" << params.t << " n=" << params.n
            << " offset=" << (params.offset ? "yes" : "no") << " w=" << params.w
            << " rows=" << rows << " tiles=" << tiles.size() << "\n";
  if (format == "svg" || format == "both") {
    write_file(stem + ".svg", export_svg(tiling, tiles, resolve_style(sf), radius));
    std::cout << "wrote " << stem << ".svg\n";
  }
  if (format == "json" || format == "both") {
    write_file(stem + ".json", export_json(tiling, tiles));
    std::cout << "wrote " << stem << ".json\n";
  }
  return 0;
}

int run_verify(const ParamFlags& pf, const std::string& in_path, double radius,
               long long samples, long long horizon, int rows, const std::string& report_stem,
               const std::string& corrupt_arg) {
  VerifyOptions options;
  options.samples = samples;
  options.horizon = horizon > 0 ? static_cast<std::size_t>(horizon) : 0;
  options.rows = rows;
  options.seed = sampler_seed();
  if (!corrupt_arg.empty()) {
    const auto colon = corrupt_arg.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("--inject-front-corruption expects LEVEL:INDEX");
    options.corrupt_front = {std::stoi(corrupt_arg.substr(0, colon)),
                             static_cast<std::size_t>(std::stoull(corrupt_arg.substr(colon + 1)))};
  }

  ValidationReport report;
  if (!in_path.empty()) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + in_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    ImportedTiling imported = import_tiling_json(buffer.str());
    options.radius = radius;  // <= 0: fall back to the free-edge enclosure
    report = verify_tile_set(imported.params, imported.set, options, {imported.consistency});
  } else {
    options.radius = radius > 0.0 ? radius : 6.0;
    report = verify_tiling(resolve_params(pf), options);
  }

  std::cout << report.to_text();
  if (!report_stem.empty()) {
    write_file(report_stem + ".txt", report.to_text());
    write_file(report_stem + ".json", report.to_json());
    std::cout << "wrote " << report_stem << ".txt and " << report_stem << ".json\n";
  }
  return report.all_passed() ? 0 : 1;
}

int run_seq(const ParamFlags& pf, const std::string& kind, int level, long long count) {
  validate_mk(pf.m, pf.k);
  const int k = pf.k;
  DirectionSequence seq;
  if (kind == "lower") seq = lower_sequence(pf.m, k);
  else if (kind == "upper") seq = upper_sequence(pf.m, k);
  else if (kind == "base") seq = shifted_progression_periodic(pf.m, k, 0);
  else if (kind == "s") seq = shifted_progression_periodic(pf.m, k, level);
  else if (kind == "front") seq = shifted_progression_periodic(pf.m, k, level + 1);
  else throw std::invalid_argument("unknown sequence kind: " + kind);

  std::size_t take = count > 0 ? static_cast<std::size_t>(count)
                               : (seq.is_finite() ? seq.finite_length()
                                                  : 2 * static_cast<std::size_t>(k));
  if (seq.is_finite()) take = std::min(take, seq.finite_length());
  const std::vector<int> terms = seq.take(take);
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (j) std::cout << ' ';
    std::cout << terms[j];
  }
  std::cout << "\n";
  return 0;
}

int run_prototile(const ParamFlags& pf, const StyleFlags& sf, const std::string& out,
                  bool no_labels) {
  const Params params = resolve_params(pf);
  const Prototile tile = build_prototile(params);
  RenderStyle style = resolve_style(sf);
  style.label_edges = !no_labels;
  if (style.scheme == ColorScheme::per_wedge) style.scheme = ColorScheme::uniform;
  const std::string stem =
      strip_known_extension(out.empty() ? default_stem(params, "krinkle-prototile-") : out);
  write_file(stem + ".svg", export_prototile_svg(tile, style));
  std::cout << "wrote " << stem << ".svg\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modulo krinkle tilings: construct, render, and verify"};
  app.require_subcommand(1);
  std::function<int()> run;

  // generate
  auto* generate = app.add_subcommand("generate", "build a tiling and write SVG/JSON");
  static ParamFlags gen_params;
  static StyleFlags gen_style;
  static int gen_rows = 8;
  static double gen_radius = 0.0;
  static std::string gen_out, gen_format = "svg";
  add_param_flags(generate, gen_params, true);
  add_style_flags(generate, gen_style);
  generate->add_option("--rows", gen_rows, "row budget per wedge");
  generate->add_option("--radius", gen_radius,
                       "window radius (0: include the whole row budget)");
  generate->add_option("--out", gen_out, "output path or stem");
  generate->add_option("--format", gen_format, "svg, json, or both")
      ->check(CLI::IsMember({"svg", "json", "both"}));
  generate->callback([&] {
    run = [] { return run_generate(gen_params, gen_style, gen_rows, gen_radius, gen_out,
                                   gen_format); };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "run the validation suite");
  static ParamFlags ver_params;
  static std::string ver_in, ver_report, ver_corrupt;
  static double ver_radius = 0.0;
  static long long ver_samples = 10000, ver_horizon = 0;
  static int ver_rows = 0;
  add_param_flags(verify, ver_params, false);
  verify->add_option("--in", ver_in, "verify a previously exported tiling json");
  verify->add_option("--radius", ver_radius,
                     "window radius (default 6; with --in, 0 means the enclosed radius)");
  verify->add_option("--samples", ver_samples, "coverage sample count");
  verify->add_option("--horizon", ver_horizon, "sequence horizon (default 10k)");
  verify->add_option("--rows", ver_rows, "row budget (0: grow until the window is enclosed)");
  verify->add_option("--report", ver_report, "write REPORT.txt and REPORT.json");
  verify->add_option("--inject-front-corruption", ver_corrupt,
                     "self-test hook: corrupt front LEVEL:INDEX before checking");
  verify->callback([&] {
    run = [] {
      if (ver_in.empty() && (ver_params.m == 0 || ver_params.k == 0))
        throw std::invalid_argument("verify needs --m/--k parameters or --in FILE");
      return run_verify(ver_params, ver_in, ver_radius, ver_samples, ver_horizon, ver_rows,
                        ver_report, ver_corrupt);
    };
  });

  // seq
  auto* seq = app.add_subcommand("seq", "print direction sequences");
  static ParamFlags seq_params;
  static std::string seq_kind = "s";
  static int seq_level = 0;
  static long long seq_count = 0;
  add_param_flags(seq, seq_params, true);
  seq->add_option("--kind", seq_kind, "s, lower, upper, base, or front")
      ->check(CLI::IsMember({"s", "lower", "upper", "base", "front"}));
  seq->add_option("--level", seq_level, "shift level i (for s and front)");
  seq->add_option("--count", seq_count, "number of terms (0: natural length)");
  seq->callback([&] {
    run = [] { return run_seq(seq_params, seq_kind, seq_level, seq_count); };
  });

  // prototile
  auto* prototile = app.add_subcommand("prototile", "render a single prototile");
  static ParamFlags proto_params;
  static StyleFlags proto_style;
  static std::string proto_out;
  static bool proto_no_labels = false;
  add_param_flags(prototile, proto_params, true);
  add_style_flags(prototile, proto_style);
  prototile->add_option("--out", proto_out, "output path or stem");
  prototile->add_flag("--no-labels", proto_no_labels, "omit the direction labels");
  prototile->callback([&] {
    run = [] { return run_prototile(proto_params, proto_style, proto_out, proto_no_labels); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run ? run() : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
