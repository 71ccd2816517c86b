// Command-line front end.  Talks to the library exclusively through the C
// API in disciso.h; report JSON is parsed here only for pretty-printing and
// for the exit-code contract:
//   0 all checks pass, 1 identity violation, 2 input error, 3 findings.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "disciso.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitIdentity = 1;
constexpr int kExitInput = 2;
constexpr int kExitFindings = 3;

struct StringOut {
  char* value = nullptr;
  ~StringOut() { disciso_string_free(value); }
  std::string str() const { return value ? value : ""; }
};

struct TriOut {
  disciso_tri* value = nullptr;
  ~TriOut() { disciso_tri_free(value); }
};

int fail(int rc) {
  std::cerr << "error: " << disciso_last_error() << "\n";
  return rc == DISCISO_EINTERNAL ? kExitIdentity : kExitInput;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

// Exit code from a report: identity violations dominate findings.
int report_exit(const std::string& report) {
  auto j = json::parse(report);
  if (j.contains("identities_ok") && !j["identities_ok"].get<bool>())
    return kExitIdentity;
  if (j.contains("findings") && !j["findings"].empty()) return kExitFindings;
  return kExitOk;
}

void print_findings(const std::string& report) {
  auto j = json::parse(report);
  if (j.contains("findings"))
    for (const auto& f : j["findings"])
      std::cout << "finding: " << f.get<std::string>() << "\n";
}

int load_tri(const std::string& path, TriOut& tri) {
  std::string text = read_file(path);
  return disciso_tri_parse(text.c_str(), &tri.value);
}

void print_strip_table(const json& j) {
  std::cout << "V=" << j["counts"]["V"] << " E=" << j["counts"]["E"]
            << " F=" << j["counts"]["F"] << " n=" << j["counts"]["n"] << "\n";
  std::cout << "m=" << j["m"] << " alpha=" << j["alpha"]
            << " gamma=" << j["gamma"] << " beta=" << j["beta"].dump()
            << " n'=" << j["n_prime"]
            << " isolated=" << j["isolated_vertices"] << "\n";
  std::cout << "components:";
  for (const auto& c : j["components"])
    std::cout << " V=" << c["V"].get<long long>() << "(b="
              << c["boundary_edges"].get<long long>() << ")";
  std::cout << "\n";
  for (const auto& idn : j["identities"]) {
    if (!idn["checked"].get<bool>()) continue;
    std::cout << (idn["holds"].get<bool>() ? "  ok   " : "  FAIL ")
              << idn["name"].get<std::string>() << ": "
              << idn["lhs"].get<long long>() << " "
              << idn["relation"].get<std::string>() << " "
              << idn["rhs"].get<long long>() << "\n";
  }
}

void print_layers_table(const json& j) {
  std::cout << "depth  boundary  vertices  (n-6k)+  excess\n";
  for (const auto& row : j["layers"]) {
    std::printf("%5lld  %8lld  %8lld  %7lld  %s\n",
                row["depth"].get<long long>(),
                row["boundary_edges"].get<long long>(),
                row["vertices"].get<long long>(),
                row["allowed"].get<long long>(),
                row["excess"].get<bool>() ? "yes" : "");
  }
  std::cout << "total vertices: " << j["total_vertices"] << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"disciso: exact isoperimetry toolkit for disc triangulations"};
  app.require_subcommand(1);

  // ---- build -------------------------------------------------------------
  auto* build = app.add_subcommand("build", "construct a triangulation");
  build->require_subcommand(1);
  std::string out_path;
  std::vector<int> sides;
  int n_param = 7, delta = 6, radius = 2;
  long long cap = 0;

  auto* hexagon = build->add_subcommand("hexagon", "convex lattice hexagon");
  hexagon->add_option("--sides", sides, "six side lengths")
      ->required()
      ->delimiter(',');
  hexagon->add_option("-o,--output", out_path, "output .tri.json")->required();

  auto* extremal =
      build->add_subcommand("extremal", "maximal-volume boundary-n shape");
  extremal->add_option("--n", n_param, "boundary length")->required();
  extremal->add_option("-o,--output", out_path)->required();

  auto* ball = build->add_subcommand("ball", "delta-regular ball");
  ball->add_option("--delta", delta, "vertex degree (>= 6)")->required();
  ball->add_option("--radius", radius, "radius (>= 0)")->required();
  ball->add_option("--cap", cap, "vertex cap");
  ball->add_option("-o,--output", out_path)->required();

  auto* patch = build->add_subcommand("patch", "triangular-lattice ball");
  patch->add_option("--radius", radius, "radius (>= 1)")->required();
  patch->add_option("-o,--output", out_path)->required();

  // ---- check / strip / layers ---------------------------------------------
  std::string in_path, complete_out;
  bool as_json = false;

  auto* check = app.add_subcommand("check", "validate and verify one file");
  check->add_option("file", in_path, "input .tri.json")->required();
  check->add_flag("--json", as_json, "emit the raw JSON report");
  check->add_option("--complete", complete_out,
                    "treat input as a simple map, complete it to a "
                    "triangulation, write it here, then check it");

  std::string layers_mode = "1";
  auto* strip = app.add_subcommand("strip", "strip boundary layers");
  strip->add_option("file", in_path)->required();
  strip->add_option("--layers", layers_mode, "1 (default) or all");
  strip->add_flag("--json", as_json);

  auto* layers = app.add_subcommand("layers", "full layer decomposition");
  layers->add_option("file", in_path)->required();
  layers->add_flag("--json", as_json);

  // ---- tables --------------------------------------------------------------
  long long n_min = 0, n_max = 64;
  auto* bounds = app.add_subcommand("bounds", "closed-form bound table (CSV)");
  bounds->add_option("--n-min", n_min);
  bounds->add_option("--n-max", n_max);
  bounds->add_option("-o,--output", out_path, "write CSV here");

  int r_max = 6;
  auto* growth = app.add_subcommand("growth", "ball growth table (CSV)");
  growth->add_option("--delta", delta)->required();
  growth->add_option("--r-max", r_max);
  growth->add_option("--cap", cap);
  growth->add_option("-o,--output", out_path);

  // ---- enumerate -----------------------------------------------------------
  int threads = 1, escalation = 2;
  std::string catalog_path;
  bool run_max_volume = false;
  auto* enumerate =
      app.add_subcommand("enumerate", "all isomorphism classes for (n, delta)");
  enumerate->add_option("--n", n_param)->required();
  enumerate->add_option("--delta", delta);
  enumerate->add_option("--cap", cap);
  enumerate->add_option("--threads", threads);
  enumerate->add_option("--catalog", catalog_path,
                        "write one canonical code per line");
  enumerate->add_flag("--max-volume", run_max_volume,
                      "run the cap-escalation protocol for the true maximum");
  enumerate->add_option("--escalation-limit", escalation);

  int v_max = 10;
  auto* animals = app.add_subcommand(
      "animals", "minimal edge boundaries of connected lattice sets");
  animals->add_option("--v-max", v_max);
  animals->add_option("-o,--output", out_path, "write CSV here");

  int prof_radius = 1, size_limit = 0;
  std::string family = "balls";
  auto* profile =
      app.add_subcommand("profile", "degree-7 coverage and |dS|/|S| profile");
  profile->add_option("file", in_path)->required();
  profile->add_option("--radius", prof_radius);
  profile->add_option("--family", family, "balls | connected-sets");
  profile->add_option("--size-limit", size_limit,
                      "max subset size for connected-sets");

  bool no_tint = false;
  auto* render = app.add_subcommand("render", "SVG drawing");
  render->add_option("file", in_path)->required();
  render->add_option("-o,--output", out_path, "output .svg")->required();
  render->add_flag("--no-tint", no_tint, "disable stripping-depth tints");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    // ---- build -----------------------------------------------------------
    if (build->parsed()) {
      TriOut tri;
      int rc = DISCISO_OK;
      if (hexagon->parsed()) {
        if (sides.size() != 6) {
          std::cerr << "error: --sides wants six comma-separated lengths\n";
          return kExitInput;
        }
        rc = disciso_build_hexagon(sides.data(), &tri.value);
      } else if (extremal->parsed()) {
        rc = disciso_build_extremal(n_param, &tri.value);
      } else if (ball->parsed()) {
        rc = disciso_build_ball(delta, radius, cap, &tri.value);
      } else {
        rc = disciso_build_patch(radius, &tri.value);
      }
      if (rc != DISCISO_OK) return fail(rc);
      StringOut text;
      if ((rc = disciso_tri_serialize(tri.value, &text.value)) != DISCISO_OK)
        return fail(rc);
      write_file(out_path, text.str() + "\n");
      long long v = 0, e = 0, f = 0, nb = 0;
      disciso_tri_counts(tri.value, &v, &e, &f, &nb);
      std::cout << out_path << ": V=" << v << " E=" << e << " F=" << f
                << " n=" << nb << "\n";
      return kExitOk;
    }

    // ---- check -----------------------------------------------------------
    if (check->parsed()) {
      TriOut tri;
      int rc;
      if (!complete_out.empty()) {
        std::string text = read_file(in_path);
        rc = disciso_map_parse_and_complete(text.c_str(), &tri.value);
        if (rc != DISCISO_OK) return fail(rc);
        StringOut serialized;
        if ((rc = disciso_tri_serialize(tri.value, &serialized.value)) !=
            DISCISO_OK)
          return fail(rc);
        write_file(complete_out, serialized.str() + "\n");
      } else {
        rc = load_tri(in_path, tri);
        if (rc != DISCISO_OK) return fail(rc);
      }
      StringOut report;
      if ((rc = disciso_check(tri.value, &report.value)) != DISCISO_OK)
        return fail(rc);
      if (as_json) {
        std::cout << report.str() << "\n";
      } else {
        auto j = json::parse(report.str());
        std::cout << "counts: " << j["counts"].dump() << "\n";
        for (const auto& b : j["bounds"])
          std::cout << b["bound"].get<std::string>() << ": "
                    << b["verdict"].get<std::string>()
                    << " (slack " << b["slack"].get<long long>() << ")\n";
        print_findings(report.str());
      }
      return report_exit(report.str());
    }

    // ---- strip / layers ----------------------------------------------------
    if (strip->parsed() || layers->parsed()) {
      TriOut tri;
      int rc = load_tri(in_path, tri);
      if (rc != DISCISO_OK) return fail(rc);
      bool full = layers->parsed() || layers_mode == "all";
      StringOut report;
      rc = full ? disciso_layers(tri.value, &report.value)
                : disciso_strip(tri.value, &report.value);
      if (rc != DISCISO_OK) return fail(rc);
      if (as_json)
        std::cout << report.str() << "\n";
      else {
        auto j = json::parse(report.str());
        if (full)
          print_layers_table(j);
        else
          print_strip_table(j);
        print_findings(report.str());
      }
      return report_exit(report.str());
    }

    // ---- bounds / growth -----------------------------------------------------
    if (bounds->parsed()) {
      StringOut csv;
      int rc = disciso_bounds_table(n_min, n_max, &csv.value);
      if (rc != DISCISO_OK) return fail(rc);
      if (out_path.empty())
        std::cout << csv.str();
      else
        write_file(out_path, csv.str());
      return kExitOk;
    }
    if (growth->parsed()) {
      StringOut csv;
      int rc = disciso_growth_table(delta, r_max, cap, &csv.value);
      if (rc != DISCISO_OK) return fail(rc);
      if (out_path.empty())
        std::cout << csv.str();
      else
        write_file(out_path, csv.str());
      return kExitOk;
    }

    // ---- enumerate -----------------------------------------------------------
    if (enumerate->parsed()) {
      StringOut summary;
      int rc;
      if (run_max_volume) {
        rc = disciso_max_volume(n_param, delta, escalation, threads,
                                &summary.value);
        if (rc != DISCISO_OK) return fail(rc);
      } else {
        StringOut catalog;
        rc = disciso_enumerate(n_param, delta, cap, threads, &summary.value,
                               catalog_path.empty() ? nullptr : &catalog.value);
        if (rc != DISCISO_OK) return fail(rc);
        if (!catalog_path.empty()) write_file(catalog_path, catalog.str());
      }
      std::cout << summary.str() << "\n";
      return report_exit(summary.str());
    }

    // ---- animals ---------------------------------------------------------
    if (animals->parsed()) {
      StringOut csv, report;
      int rc = disciso_animals(v_max, &csv.value, &report.value);
      if (rc != DISCISO_OK) return fail(rc);
      if (out_path.empty())
        std::cout << csv.str();
      else
        write_file(out_path, csv.str());
      print_findings(report.str());
      return report_exit(report.str());
    }

    // ---- profile -----------------------------------------------------------
    if (profile->parsed()) {
      TriOut tri;
      int rc = load_tri(in_path, tri);
      if (rc != DISCISO_OK) return fail(rc);
      StringOut report;
      rc = disciso_profile(tri.value, prof_radius, family.c_str(), size_limit,
                           &report.value);
      if (rc != DISCISO_OK) return fail(rc);
      std::cout << report.str() << "\n";
      return report_exit(report.str());
    }

    // ---- render ----------------------------------------------------------
    if (render->parsed()) {
      TriOut tri;
      int rc = load_tri(in_path, tri);
      if (rc != DISCISO_OK) return fail(rc);
      StringOut svg;
      int crossings = 0;
      rc = disciso_render_svg(tri.value, no_tint ? 0 : 1, &svg.value,
                              &crossings);
      if (rc != DISCISO_OK) return fail(rc);
      write_file(out_path, svg.str());
      if (crossings > 0)
        std::cerr << "warning: " << crossings << " edge crossings\n";
      std::cout << out_path << "\n";
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
