#include "disciso.h"

#include <chrono>
#include <cstring>
#include <new>
#include <string>

#include "disciso/builders.hpp"
#include "disciso/enumerate.hpp"
#include "disciso/isoperimetry.hpp"
#include "disciso/render.hpp"
#include "disciso/reports.hpp"

struct disciso_tri {
  disciso::DiscTriangulation value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return DISCISO_OK;
  } catch (const disciso::InputError& e) {
    g_last_error = e.what();
    return DISCISO_EINVAL;
  } catch (const disciso::ValidationError& e) {
    g_last_error = e.what();
    return DISCISO_EINVAL;
  } catch (const disciso::CompletionStuck& e) {
    g_last_error = e.what();
    return DISCISO_EINVAL;
  } catch (const disciso::Error& e) {
    g_last_error = e.what();
    return DISCISO_EINVAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DISCISO_EINTERNAL;
  }
}

int need(const void* p, const char* what) {
  if (p) return DISCISO_OK;
  g_last_error = std::string("null ") + what;
  return DISCISO_EINVAL;
}

}  // namespace

extern "C" {

const char* disciso_version(void) { return "1.0.0"; }

const char* disciso_last_error(void) { return g_last_error.c_str(); }

void disciso_string_free(char* s) { delete[] s; }

void disciso_tri_free(disciso_tri* t) { delete t; }

int disciso_tri_parse(const char* json_text, disciso_tri** out) {
  if (int rc = need(json_text, "input") + need(out, "out")) return rc;
  return guarded([&] {
    *out = new disciso_tri{disciso::parse_triangulation(json_text)};
  });
}

int disciso_map_parse_and_complete(const char* json_text, disciso_tri** out) {
  if (int rc = need(json_text, "input") + need(out, "out")) return rc;
  return guarded([&] {
    auto map = disciso::parse_disc_map(json_text);
    *out = new disciso_tri{disciso::triangulate_simple_map(map)};
  });
}

int disciso_build_hexagon(const int sides[6], disciso_tri** out) {
  if (int rc = need(sides, "sides") + need(out, "out")) return rc;
  return guarded([&] {
    disciso::HexagonSpec spec{
        {sides[0], sides[1], sides[2], sides[3], sides[4], sides[5]}};
    *out = new disciso_tri{disciso::build_hexagon(spec)};
  });
}

int disciso_build_extremal(int n, disciso_tri** out) {
  if (int rc = need(out, "out")) return rc;
  return guarded([&] { *out = new disciso_tri{disciso::build_extremal(n)}; });
}

int disciso_build_ball(int degree, int radius, long long vertex_cap,
                       disciso_tri** out) {
  if (int rc = need(out, "out")) return rc;
  return guarded([&] {
    disciso::BallSpec spec{degree, radius};
    *out = new disciso_tri{vertex_cap > 0
                               ? disciso::build_regular_ball(spec, vertex_cap)
                               : disciso::build_regular_ball(spec)};
  });
}

int disciso_build_patch(int radius, disciso_tri** out) {
  if (int rc = need(out, "out")) return rc;
  return guarded(
      [&] { *out = new disciso_tri{disciso::build_lattice_patch(radius)}; });
}

int disciso_tri_decode(const char* code, disciso_tri** out) {
  if (int rc = need(code, "code") + need(out, "out")) return rc;
  return guarded([&] { *out = new disciso_tri{disciso::decode_code(code)}; });
}

int disciso_tri_serialize(const disciso_tri* t, char** json_out) {
  if (int rc = need(t, "triangulation") + need(json_out, "out")) return rc;
  return guarded([&] { *json_out = dup_string(disciso::serialize(t->value)); });
}

int disciso_tri_counts(const disciso_tri* t, long long* v, long long* e,
                       long long* f, long long* n) {
  if (int rc = need(t, "triangulation")) return rc;
  return guarded([&] {
    auto c = disciso::counts(t->value);
    if (v) *v = c.vertices;
    if (e) *e = c.edges;
    if (f) *f = c.faces;
    if (n) *n = c.boundary;
  });
}

int disciso_tri_canonical_code(const disciso_tri* t, char** code_out) {
  if (int rc = need(t, "triangulation") + need(code_out, "out")) return rc;
  return guarded(
      [&] { *code_out = dup_string(disciso::canonical_code(t->value)); });
}

int disciso_tri_isomorphic(const disciso_tri* a, const disciso_tri* b,
                           int* result_out) {
  if (int rc = need(a, "lhs") + need(b, "rhs") + need(result_out, "out"))
    return rc;
  return guarded([&] {
    *result_out = disciso::canonical_code(a->value) ==
                          disciso::canonical_code(b->value)
                      ? 1
                      : 0;
  });
}

int disciso_check(const disciso_tri* t, char** report_json_out) {
  if (int rc = need(t, "triangulation") + need(report_json_out, "out"))
    return rc;
  return guarded([&] {
    *report_json_out = dup_string(disciso::check_report_json(t->value));
  });
}

int disciso_strip(const disciso_tri* t, char** report_json_out) {
  if (int rc = need(t, "triangulation") + need(report_json_out, "out"))
    return rc;
  return guarded([&] {
    *report_json_out = dup_string(disciso::strip_report_json(t->value));
  });
}

int disciso_layers(const disciso_tri* t, char** report_json_out) {
  if (int rc = need(t, "triangulation") + need(report_json_out, "out"))
    return rc;
  return guarded([&] {
    *report_json_out = dup_string(disciso::layers_report_json(t->value));
  });
}

int disciso_bounds_table(long long n_min, long long n_max, char** csv_out) {
  if (int rc = need(csv_out, "out")) return rc;
  return guarded(
      [&] { *csv_out = dup_string(disciso::bounds_table_csv(n_min, n_max)); });
}

int disciso_growth_table(int degree, int r_max, long long vertex_cap,
                         char** csv_out) {
  if (int rc = need(csv_out, "out")) return rc;
  return guarded([&] {
    auto g = vertex_cap > 0 ? disciso::growth_table(degree, r_max, vertex_cap)
                            : disciso::growth_table(degree, r_max);
    *csv_out = dup_string(disciso::growth_table_csv(g));
  });
}

int disciso_enumerate(int n, int delta_min, long long vertex_cap, int threads,
                      char** summary_json_out, char** catalog_out) {
  if (int rc = need(summary_json_out, "out")) return rc;
  return guarded([&] {
    disciso::EnumSpec spec;
    spec.n = n;
    spec.delta_min = delta_min;
    spec.vertex_cap = vertex_cap;
    spec.threads = threads;
    spec.collect = catalog_out != nullptr;
    auto t0 = std::chrono::steady_clock::now();
    auto e = disciso::enumerate_triangulations(spec);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    *summary_json_out = dup_string(disciso::enumerate_summary_json(e, ms));
    if (catalog_out) *catalog_out = dup_string(disciso::catalog_text(e));
  });
}

int disciso_max_volume(int n, int delta_min, int escalation_limit,
                       int threads, char** report_json_out) {
  if (int rc = need(report_json_out, "out")) return rc;
  return guarded([&] {
    auto r = disciso::max_volume(n, delta_min, escalation_limit, threads);
    *report_json_out = dup_string(disciso::max_volume_report_json(r));
  });
}

int disciso_animals(int v_max, char** csv_out, char** report_json_out) {
  return guarded([&] {
    auto patch = disciso::build_lattice_patch(v_max + 2);
    auto table = disciso::min_boundary_by_volume(patch, v_max);
    if (csv_out) *csv_out = dup_string(disciso::animals_table_csv(table));
    if (report_json_out)
      *report_json_out = dup_string(disciso::animals_report_json(table));
  });
}

int disciso_profile(const disciso_tri* t, int radius, const char* family,
                    int size_limit, char** report_json_out) {
  if (int rc = need(t, "triangulation") + need(report_json_out, "out"))
    return rc;
  return guarded([&] {
    disciso::ProfileFamily fam = disciso::ProfileFamily::kBalls;
    if (family && std::string(family) == "connected-sets")
      fam = disciso::ProfileFamily::kConnectedSets;
    else if (family && std::string(family) != "balls")
      throw disciso::InputError("unknown family (want balls|connected-sets)");
    auto p = disciso::coverage_and_profile(t->value, radius, fam, size_limit);
    *report_json_out = dup_string(disciso::profile_report_json(p));
  });
}

int disciso_render_svg(const disciso_tri* t, int tint_layers, char** svg_out,
                       int* crossings_out) {
  if (int rc = need(t, "triangulation") + need(svg_out, "out")) return rc;
  return guarded([&] {
    auto r = disciso::render_svg(t->value, tint_layers != 0);
    *svg_out = dup_string(r.svg);
    if (crossings_out) *crossings_out = r.crossings;
  });
}

}  // extern "C"
