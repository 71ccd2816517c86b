#include "disciso/reports.hpp"

#include <sstream>

#include "json.hpp"

namespace disciso {

namespace {

using nlohmann::ordered_json;

ordered_json counts_json(const DiscTriangulation& t) {
  auto c = counts(t);
  ordered_json j;
  j["V"] = c.vertices;
  j["E"] = c.edges;
  j["F"] = c.faces;
  j["n"] = c.boundary;
  j["internal_vertices"] = c.profile.internal_vertex_count;
  if (c.profile.sigma_defined()) {
    j["internal_degree_sum"] = c.profile.internal_degree_sum;
    j["min_internal_degree"] = c.profile.min_internal_degree;
  } else {
    j["sigma"] = nullptr;  // undefined when V = n
  }
  j["min_degree"] = c.profile.min_degree_overall;
  return j;
}

ordered_json identity_json(const IdentityCheck& c) {
  ordered_json j;
  j["name"] = c.name;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["relation"] = c.is_equality ? "==" : "<=";
  j["checked"] = c.checked;
  j["holds"] = c.holds;
  j["kind"] = c.hard ? "identity" : "inequality";
  return j;
}

ordered_json bound_json(const BoundReport& b) {
  ordered_json j;
  j["instance"] = b.instance;
  j["bound"] = b.bound_name;
  j["bound_value"] = b.bound;
  j["observed"] = b.observed;
  j["verdict"] = b.pass ? "PASS" : "VIOLATION";
  j["slack"] = b.slack;
  if (!b.note.empty()) j["note"] = b.note;
  return j;
}

// Aggregates hard/soft outcomes into the standard trailer fields.
void finish(ordered_json& j, bool identities_ok,
            std::vector<std::string> findings) {
  j["identities_ok"] = identities_ok;
  j["findings"] = findings;
}

ordered_json strip_json_body(const DiscTriangulation& t) {
  StripReport r = strip_layer(t);
  auto checks = verify_strip_identities(t, r);

  ordered_json j;
  j["counts"] = counts_json(t);
  j["m"] = r.m;
  j["alpha"] = r.alpha;
  j["gamma"] = r.gamma;
  j["beta"] = {r.beta[0], r.beta[1], r.beta[2], r.beta[3]};
  j["new_boundary_faces"] = r.new_boundary_faces;
  j["n_prime"] = r.n_prime;
  j["isolated_vertices"] = r.isolated_vertices;
  ordered_json comps = ordered_json::array();
  for (const auto& c : r.components) {
    ordered_json cj;
    cj["V"] = c.piece.vertex_count();
    cj["boundary_edges"] = c.boundary_edges;
    cj["code"] = canonical_code(c.piece);
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  ordered_json ids = ordered_json::array();
  for (const auto& c : checks) ids.push_back(identity_json(c));
  j["identities"] = std::move(ids);

  std::vector<std::string> findings;
  for (const auto& c : checks)
    if (!c.hard && !c.holds)
      findings.push_back("inequality violated: " + c.name + " (" +
                         std::to_string(c.lhs) + " vs " +
                         std::to_string(c.rhs) + ")");
  finish(j, all_hard_hold(checks), std::move(findings));
  return j;
}

}  // namespace

std::string strip_report_json(const DiscTriangulation& t) {
  return strip_json_body(t).dump(2);
}

std::string check_report_json(const DiscTriangulation& t) {
  ordered_json j;
  j["counts"] = counts_json(t);
  bool identities_ok = true;
  std::vector<std::string> findings;

  if (t.vertex_count() >= 3) {
    StripReport r = strip_layer(t);
    auto checks = verify_strip_identities(t, r);
    ordered_json ids = ordered_json::array();
    for (const auto& c : checks) ids.push_back(identity_json(c));
    j["identities"] = std::move(ids);
    identities_ok = all_hard_hold(checks);
    for (const auto& c : checks)
      if (!c.hard && !c.holds)
        findings.push_back("inequality violated: " + c.name);
  }

  auto profile = t.degree_profile();
  ordered_json bounds = ordered_json::array();
  if (profile.internal_vertex_count == 0 || profile.min_internal_degree >= 6) {
    auto b = check_volume_bound(t);
    if (!b.pass)
      findings.push_back("volume bound violated: V=" +
                         std::to_string(b.observed) + " > " +
                         std::to_string(b.bound));
    bounds.push_back(bound_json(b));
  }
  if (profile.internal_vertex_count > 0 && profile.min_internal_degree >= 7) {
    int delta = profile.min_internal_degree;
    auto table = growth_table(delta, 12, 2'000'000,
                              /*verify_against_bfs=*/false);
    auto b = check_hyperbolic_bound(t, delta, table);
    if (!b.pass)
      findings.push_back("hyperbolic bound violated at delta=" +
                         std::to_string(delta));
    bounds.push_back(bound_json(b));
  }
  j["bounds"] = std::move(bounds);
  finish(j, identities_ok, std::move(findings));
  return j.dump(2);
}

std::string layers_report_json(const DiscTriangulation& t) {
  auto d = layer_decomposition(t);
  ordered_json j;
  j["n"] = t.boundary_length();
  ordered_json rows = ordered_json::array();
  for (const auto& row : d.layers) {
    ordered_json rj;
    rj["depth"] = row.depth;
    rj["boundary_edges"] = row.boundary_edges;
    rj["vertices"] = row.vertices;
    rj["allowed"] = row.allowed;
    rj["excess"] = row.excess;
    rows.push_back(std::move(rj));
  }
  j["layers"] = std::move(rows);
  j["total_vertices"] = d.total_vertices;
  // Depths above the layered budget are recorded in the rows; they are
  // observations about the closed form, not verdicts, so they do not count
  // as findings for the exit-code contract.
  j["excess_depths"] = d.any_excess;
  finish(j, true, {});
  return j.dump(2);
}

std::string bounds_table_csv(long long n_min, long long n_max) {
  if (n_min < 0 || n_max < n_min) throw InputError("bad bounds range");
  std::ostringstream os;
  os << "n,weil_bound,layered_sum,equal\n";
  for (long long n = n_min; n <= n_max; ++n) {
    long long w = weil_bound(n), l = layered_sum(n);
    os << n << "," << w << "," << l << "," << (w == l ? 1 : 0) << "\n";
  }
  return os.str();
}

std::string growth_table_csv(const GrowthTable& g) {
  std::ostringstream os;
  os << "R,V_R,S_R,bfs_V,bfs_S\n";
  for (int r = 0; r <= g.r_max; ++r) {
    os << r << "," << g.V[static_cast<size_t>(r)] << ","
       << g.S[static_cast<size_t>(r)] << ",";
    if (g.bfs_verified)
      os << g.bfs_V[static_cast<size_t>(r)] << ","
         << g.bfs_S[static_cast<size_t>(r)];
    else
      os << ",";
    os << "\n";
  }
  return os.str();
}

std::string enumerate_summary_json(const EnumResult& e, long long wall_ms) {
  ordered_json j;
  j["n"] = e.spec.n;
  j["delta_min"] = e.spec.delta_min;
  j["cap"] = e.cap;
  j["classes"] = e.class_count;
  j["labeled"] = e.labeled_count;
  j["max_v"] = e.max_v;
  j["cap_pruned_branches"] = e.cap_pruned;
  j["cap_hit"] = e.cap_hit;
  j["extremal_codes"] = e.extremal_codes;
  j["wall_ms"] = wall_ms;
  std::vector<std::string> findings;
  long long bound = weil_bound(e.spec.n);
  if (e.spec.delta_min >= 6 && e.max_v > bound)
    findings.push_back("max volume " + std::to_string(e.max_v) +
                       " exceeds floor((n+3)^2/12) = " + std::to_string(bound));
  finish(j, true, std::move(findings));
  return j.dump(2);
}

std::string catalog_text(const EnumResult& e) {
  std::ostringstream os;
  for (const auto& code : e.codes) os << code << "\n";
  return os.str();
}

std::string max_volume_report_json(const MaxVolumeResult& r) {
  ordered_json j;
  j["n"] = r.n;
  j["delta_min"] = r.delta_min;
  j["max_v"] = r.max_v;
  j["decided"] = r.decided;
  j["cap_history"] = r.cap_history;
  j["classes"] = r.class_count;
  j["extremal_codes"] = r.extremal_codes;
  std::vector<std::string> findings;
  long long bound = weil_bound(r.n);
  if (r.delta_min >= 6 && r.max_v > bound) {
    std::string note = "max volume " + std::to_string(r.max_v) +
                       " exceeds floor((n+3)^2/12) = " + std::to_string(bound);
    // Name the witness when it is the unit hexagon (wheel on six spokes).
    if (r.n == 6 && r.max_v == 7)
      note += "; attained by the side-1 hexagon (sides 1,1,1,1,1,1)";
    findings.push_back(std::move(note));
  }
  if (!r.decided)
    findings.push_back("undecided: cap escalation limit reached");
  finish(j, true, std::move(findings));
  return j.dump(2);
}

std::string animals_table_csv(const AnimalTable& t) {
  std::ostringstream os;
  os << "V,min_boundary,boundary_sq,bound_48V,pass,witness\n";
  for (size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    const auto& b = t.bound_checks[i];
    os << r.volume << "," << r.min_boundary << "," << b.observed << ","
       << b.bound << "," << (b.pass ? 1 : 0) << "," << r.witness << "\n";
  }
  return os.str();
}

std::string animals_report_json(const AnimalTable& t) {
  ordered_json j;
  j["v_max"] = t.v_max;
  ordered_json rows = ordered_json::array();
  std::vector<std::string> findings;
  for (size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    const auto& b = t.bound_checks[i];
    ordered_json rj;
    rj["volume"] = r.volume;
    rj["min_boundary"] = r.min_boundary;
    rj["classes"] = r.animal_classes;
    rj["bound"] = bound_json(b);
    rj["witness"] = r.witness;
    rows.push_back(std::move(rj));
    if (!b.pass)
      findings.push_back("edge bound violated at V=" +
                         std::to_string(r.volume) + ": |dA|^2 = " +
                         std::to_string(b.observed) + " < " +
                         std::to_string(b.bound));
  }
  j["rows"] = std::move(rows);
  finish(j, true, std::move(findings));
  return j.dump(2);
}

std::string profile_report_json(const IsoProfile& p) {
  ordered_json j;
  j["radius"] = p.radius;
  j["degree_threshold"] = p.degree_threshold;
  j["coverage"] = p.coverage;
  j["balls_scanned"] = p.balls_scanned;
  j["family"] =
      p.family == ProfileFamily::kBalls ? "balls" : "connected-sets";
  if (p.family == ProfileFamily::kConnectedSets)
    j["size_limit"] = p.family_size_limit;
  j["subsets_scanned"] = p.subsets_scanned;
  j["min_ratio"] = p.min_ratio.str();
  j["argmin"] = p.argmin;
  finish(j, true, {});
  return j.dump(2);
}

ReportFlags report_flags(const std::string& report_json) {
  auto j = nlohmann::json::parse(report_json);
  ReportFlags f;
  if (j.contains("identities_ok")) f.identities_ok = j["identities_ok"];
  if (j.contains("findings")) f.has_findings = !j["findings"].empty();
  return f;
}

}  // namespace disciso
