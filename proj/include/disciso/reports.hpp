#pragma once

// Report rendering shared by the C API and tests: machine-readable JSON plus
// the CSV tables the CLI writes.  Every report carries the two flags the
// exit-code contract needs: identities_ok (hard equalities) and findings
// (soft inequality or bound violations).

#include <string>

#include "disciso/bounds.hpp"
#include "disciso/enumerate.hpp"
#include "disciso/isoperimetry.hpp"
#include "disciso/planar_map.hpp"
#include "disciso/strip.hpp"

namespace disciso {

// Validation + counts + one strip layer's identity checks + the volume and
// hyperbolic bounds where their hypotheses hold.
std::string check_report_json(const DiscTriangulation& t);

std::string strip_report_json(const DiscTriangulation& t);

std::string layers_report_json(const DiscTriangulation& t);

// CSV: n,weil_bound,layered_sum,equal
std::string bounds_table_csv(long long n_min, long long n_max);

// CSV: R,V_R,S_R,bfs_V,bfs_S
std::string growth_table_csv(const GrowthTable& g);

std::string enumerate_summary_json(const EnumResult& e, long long wall_ms);
std::string catalog_text(const EnumResult& e);

std::string max_volume_report_json(const MaxVolumeResult& r);

// CSV: V,min_boundary,bound_sq_pass,witness
std::string animals_table_csv(const AnimalTable& t);
std::string animals_report_json(const AnimalTable& t);

std::string profile_report_json(const IsoProfile& p);

// Extracts the exit-status flags from any report produced above.
struct ReportFlags {
  bool identities_ok = true;
  bool has_findings = false;
};
ReportFlags report_flags(const std::string& report_json);

}  // namespace disciso
