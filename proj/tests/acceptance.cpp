// Acceptance suite: runs every acceptance criterion end to end and prints
// one pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <json.hpp>
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "krinkle/assembly.hpp"
#include "krinkle/prototile.hpp"
#include "krinkle/sequences.hpp"
#include "krinkle/validator.hpp"

namespace fs = std::filesystem;
using namespace krinkle;

namespace {

struct Failure {
  std::string message;
};

void expect(bool condition, const std::string& message) {
  if (!condition) throw Failure{message};
}

std::vector<Params> parameter_grid() {
  std::vector<Params> grid;
  for (int k = 2; k <= 12; ++k)
    for (int m = 1; m < k; ++m) {
      if (std::gcd(m, k) != 1) continue;
      for (int t : {2, 3, 4})
        for (bool offset : {false, true}) grid.push_back(Params::from_t(m, k, t, offset));
    }
  return grid;
}

std::vector<Params> fixture_params() {
  return {Params::from_n(3, 7, 14),  Params::from_n(3, 7, 22), Params::from_n(2, 5, 10),
          Params::from_n(1, 4, 14),  Params::from_n(3, 8, 24), Params::from_n(2, 9, 32),
          Params::from_n(7, 17, 34), Params::from_n(5, 16, 54)};
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("krinkle_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const fs::path out = scratch_dir() / "cmd_output.txt";
  const std::string cmd = std::string(KRINKLE_CLI_PATH) + " " + args + " > " + out.string() +
                          " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::ostringstream buf;
  buf << in.rdbuf();
  result.output = buf.str();
  return result;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  expect(in.good(), "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

// --------------------------------------------------------------------------

std::string criterion_sequences() {
  const std::vector<Params> grid = parameter_grid();
  for (const Params& p : grid) {
    const std::size_t horizon = 10 * static_cast<std::size_t>(p.k);
    for (const CheckResult& c : check_sequence_identities(p, horizon)) {
      const bool structural =
          c.name == "condition_c_shifted" || c.name == "condition_c_lower" ||
          c.name == "front_identity" || c.name == "closure_identity";
      if (structural)
        expect(c.passed, "m=" + std::to_string(p.m) + " k=" + std::to_string(p.k) +
                             " t=" + std::to_string(p.t) + (p.offset ? " offset " : " ") +
                             c.name + ": " + c.detail);
    }
  }
  return std::to_string(grid.size()) + " parameter sets, horizon 10k, exact integer checks";
}

std::string criterion_alignment() {
  const std::vector<Params> grid = parameter_grid();
  for (const Params& p : grid) {
    const CheckResult c = check_lattice_alignment(p);
    expect(c.passed, "m=" + std::to_string(p.m) + " k=" + std::to_string(p.k) + ": " + c.detail);
    for (const CheckResult& d : check_sequence_identities(p, 10 * static_cast<std::size_t>(p.k)))
      if (d.name == "alignment_index_scan") expect(d.passed, d.detail);
  }
  return std::to_string(grid.size()) +
         " parameter sets, wedge boundaries retrace fronts over 3k edges, "
         "j* formula = scan";
}

std::string criterion_prototile() {
  const std::vector<Params> grid = parameter_grid();
  for (const Params& p : grid) {
    const Prototile tile = build_prototile(p);  // throws unless simple and oriented
    expect(tile.lower_vertices.back() == tile.upper_vertices.back(),
           "path endpoints differ for k=" + std::to_string(p.k));
    expect(interior_direction_check(p), "interior direction check failed");
    const auto poly = tile.projected_boundary();
    expect(is_simple_polygon(poly), "simplicity failed");
    const int straight = count_straight_vertices(poly);
    expect(straight == (p.n == 2 * p.k ? 2 : 0),
           "straight-vertex count " + std::to_string(straight) + " for n=" +
               std::to_string(p.n) + ", k=" + std::to_string(p.k));
  }
  return std::to_string(grid.size()) +
         " parameter sets: exact endpoints, simple boundary, interior "
         "positivity, n=2k straight pair";
}

std::string criterion_windows() {
  for (const Params& p : fixture_params()) {
    VerifyOptions options;
    options.radius = 6.0;
    options.samples = 10000;
    const ValidationReport report = verify_tiling(p, options);
    for (const CheckResult& c : report.checks)
      expect(c.passed, "(" + std::to_string(p.m) + "," + std::to_string(p.k) + "," +
                           std::to_string(p.n) + ") " + c.name + ": " + c.detail);
  }
  return "8 fixtures, radius 6, edge matching + angle sums (1e-9) + 10^4-point coverage";
}

std::string criterion_negative_controls() {
  const fs::path base = scratch_dir() / "neg";
  expect(run_cli("generate --m 3 --k 7 --n 14 --rows 6 --format json --out " + q(base))
                 .exit_code == 0,
         "generate failed");
  const std::string pristine = read_file(scratch_dir() / "neg.json");

  // Corrupted front term.
  const RunResult front = run_cli(
      "verify --m 3 --k 7 --n 14 --radius 2 --samples 500 --inject-front-corruption 2:9");
  expect(front.exit_code == 1, "corrupted front: expected exit 1, got " +
                                   std::to_string(front.exit_code));
  expect(front.output.find("[FAIL] front_identity") != std::string::npos,
         "corrupted front not reported");

  // Deleted tile.
  nlohmann::json doc = nlohmann::json::parse(pristine);
  doc["tiles"].erase(0);
  write_file(scratch_dir() / "neg_deleted.json", doc.dump());
  const RunResult deleted = run_cli("verify --in " + q(scratch_dir() / "neg_deleted.json") +
                                    " --radius 3 --samples 1000");
  expect(deleted.exit_code == 1, "deleted tile: expected exit 1, got " +
                                     std::to_string(deleted.exit_code));
  expect(deleted.output.find("unmatched") != std::string::npos, "deleted tile not reported");

  // Duplicated tile.
  doc = nlohmann::json::parse(pristine);
  doc["tiles"].push_back(doc["tiles"][0]);
  write_file(scratch_dir() / "neg_doubled.json", doc.dump());
  const RunResult doubled = run_cli("verify --in " + q(scratch_dir() / "neg_doubled.json") +
                                    " --radius 3 --samples 1000");
  expect(doubled.exit_code == 1, "duplicated tile: expected exit 1, got " +
                                     std::to_string(doubled.exit_code));
  return "corrupted front, deleted tile, duplicated tile all fail with exit 1";
}

void check_figure(const Params& p, const std::string& stem, int rows) {
  const fs::path a = scratch_dir() / (stem + "_a");
  const fs::path b = scratch_dir() / (stem + "_b");
  const std::string flags = "generate --m " + std::to_string(p.m) + " --k " +
                            std::to_string(p.k) + " --n " + std::to_string(p.n) + " --rows " +
                            std::to_string(rows) + " --format both --out ";
  expect(run_cli(flags + q(a)).exit_code == 0, stem + ": generate failed");
  expect(run_cli(flags + q(b)).exit_code == 0, stem + ": second generate failed");

  const std::string json_a = read_file(fs::path(a.string() + ".json"));
  expect(json_a == read_file(fs::path(b.string() + ".json")), stem + ": json snapshot unstable");
  const std::string svg_a = read_file(fs::path(a.string() + ".svg"));
  expect(svg_a == read_file(fs::path(b.string() + ".svg")), stem + ": svg snapshot unstable");

  const nlohmann::json doc = nlohmann::json::parse(json_a);
  const int copies = closure_copies(p);
  const std::size_t expected_tiles = static_cast<std::size_t>(copies) *
                                     static_cast<std::size_t>(p.w) *
                                     static_cast<std::size_t>(rows) *
                                     (static_cast<std::size_t>(rows) + 1) / 2;
  expect(doc.at("tiles").size() == expected_tiles,
         stem + ": tile count " + std::to_string(doc.at("tiles").size()) + " != " +
             std::to_string(expected_tiles));

  // n wedges around the center: w per fundamental region times closure copies.
  std::set<int> wedge_labels;
  std::map<int, std::vector<nlohmann::json>> by_wedge;
  for (const auto& tile : doc.at("tiles")) {
    wedge_labels.insert(tile.at("wedge").get<int>());
    by_wedge[tile.at("wedge").get<int>()].push_back(tile);
  }
  expect(static_cast<int>(wedge_labels.size()) == p.n,
         stem + ": wedge label count != n");
  expect(copies * p.w == p.n, stem + ": w * copies != n");

  // Within one wedge every tile is the same rotation; vertex offsets match,
  // so the tiles differ by translations only.
  for (const auto& [label, tiles] : by_wedge) {
    const auto& reference = tiles.front();
    const auto ref_rot = reference.at("rotation_index").get<int>();
    const auto& ref_verts = reference.at("vertices");
    for (const auto& tile : tiles) {
      expect(tile.at("rotation_index").get<int>() == ref_rot,
             stem + ": rotation differs inside wedge " + std::to_string(label));
      expect(ref_rot == label % p.n, stem + ": rotation != wedge label");
      const auto& verts = tile.at("vertices");
      const double dx = verts[0][0].get<double>() - ref_verts[0][0].get<double>();
      const double dy = verts[0][1].get<double>() - ref_verts[0][1].get<double>();
      for (std::size_t j = 0; j < verts.size(); ++j) {
        const double ex = verts[j][0].get<double>() - ref_verts[j][0].get<double>() - dx;
        const double ey = verts[j][1].get<double>() - ref_verts[j][1].get<double>() - dy;
        expect(std::abs(ex) < 1e-9 && std::abs(ey) < 1e-9,
               stem + ": tiles in wedge " + std::to_string(label) +
                   " are not pure translates");
      }
    }
  }

  const std::size_t polygons = [&] {
    std::size_t count = 0;
    for (std::size_t pos = svg_a.find("<polygon"); pos != std::string::npos;
         pos = svg_a.find("<polygon", pos + 1))
      ++count;
    return count;
  }();
  expect(polygons == expected_tiles, stem + ": svg polygon count != tile count");
}

std::string criterion_figures() {
  check_figure(Params::from_n(3, 7, 14), "fig_no_offset", 4);
  check_figure(Params::from_n(3, 7, 22), "fig_offset", 4);
  return "(3,7,14) and (3,7,22): tile counts, n wedges, per-wedge congruence, "
         "byte-stable snapshots";
}

std::string criterion_determinism() {
  for (const Params& p : fixture_params()) {
    const std::string stem = "det-" + std::to_string(p.m) + "-" + std::to_string(p.k) + "-" +
                             std::to_string(p.n);
    const fs::path a = scratch_dir() / (stem + "_a");
    const fs::path b = scratch_dir() / (stem + "_b");
    const std::string flags = "generate --m " + std::to_string(p.m) + " --k " +
                              std::to_string(p.k) + " --n " + std::to_string(p.n) +
                              " --rows 3 --format json --out ";
    expect(run_cli(flags + q(a)).exit_code == 0, stem + ": generate failed");
    expect(run_cli(flags + q(b)).exit_code == 0, stem + ": generate failed");
    expect(read_file(fs::path(a.string() + ".json")) == read_file(fs::path(b.string() + ".json")),
           stem + ": bytes differ between runs");
  }
  return "8 fixtures, consecutive json runs byte-identical";
}

int run_criterion(int number, const std::string& title, double budget_seconds,
                  const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  try {
    const std::string detail = body();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << "[PASS] " << number << ". " << title << " - " << detail << " (" << std::fixed
         << std::setprecision(2) << elapsed << " s)";
    std::cout << line.str() << "\n";
    if (budget_seconds > 0 && elapsed > budget_seconds) {
      std::cout << "[FAIL] " << number << ". " << title << " - exceeded the " << budget_seconds
                << " s budget\n";
      return 1;
    }
    return 0;
  } catch (const Failure& f) {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "[FAIL] " << number << ". " << title << " - " << f.message << " ("
              << std::fixed << std::setprecision(2) << elapsed << " s)\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << "[FAIL] " << number << ". " << title << " - exception: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main() {
  int failures = 0;
  failures += run_criterion(1, "sequence identities", 5.0, criterion_sequences);
  failures += run_criterion(2, "lattice alignment", 5.0, criterion_alignment);
  failures += run_criterion(3, "prototile geometry", 5.0, criterion_prototile);
  failures += run_criterion(4, "windowed tiling validity", 30.0, criterion_windows);
  failures += run_criterion(5, "negative controls", 0.0, criterion_negative_controls);
  failures += run_criterion(6, "figure reproduction", 0.0, criterion_figures);
  failures += run_criterion(7, "determinism", 0.0, criterion_determinism);
  if (failures == 0)
    std::cout << "acceptance: all 7 criteria passed\n";
  else
    std::cout << "acceptance: " << failures << " criteria failed\n";
  return failures;
}
