#pragma once

#include <string>
#include <vector>

#include "disciso/planar_map.hpp"

namespace disciso {

// Outcome of one closed-form bound check.  All comparisons are exact
// integer arithmetic; for the square-root bound both sides are squared.
// Violations are findings, never aborts.
struct BoundReport {
  std::string instance;
  std::string bound_name;
  long long bound = 0;
  long long observed = 0;
  bool pass = false;
  long long slack = 0;  // observed - bound for lower bounds, bound - observed for upper
  std::string note;
};

// floor((n+3)^2 / 12); asserts equality with the layered sum
// sum_{k>=0} (n-6k)^+ and throws on mismatch.
long long weil_bound(long long n);

// The layered sum itself, evaluated term by term.
long long layered_sum(long long n);

// V <= weil_bound(n) for min internal degree >= 6 (vacuous when there are
// no internal vertices).  Throws InputError if an internal degree is < 6.
BoundReport check_volume_bound(const DiscTriangulation& t);

// Growth of balls in the delta-regular triangulation.
// V_R = V_{R-1} + S_R with S_R = S_{R-1} + 6 + (delta-6) V_{R-1},
// seeded (V_0, S_0) = (1, 0); cross-verified against BFS layer counts of a
// constructed ball when verify_against_bfs is set (hard failure on
// mismatch).
struct GrowthTable {
  int delta = 6;
  int r_max = 0;
  std::vector<long long> V;      // V[0..r_max]
  std::vector<long long> S;      // S[0..r_max]
  std::vector<long long> bfs_V;  // filled when verified
  std::vector<long long> bfs_S;
  bool bfs_verified = false;
};

GrowthTable growth_table(int delta, int r_max, long long vertex_cap = 200'000,
                         bool verify_against_bfs = true);

// Growth bound check: the largest R with V >= V_R must satisfy n >= S_R.
// Requires min internal degree >= delta >= 7.
BoundReport check_hyperbolic_bound(const DiscTriangulation& t, int delta,
                                   const GrowthTable& table);

// |dA|^2 >= 48 V, compared in integers.  When boundary_vertex_count >= 0 is
// supplied, the intermediate lower bound 2n+6 is reported in the note.
BoundReport check_edge_bound(long long v_count, long long edge_boundary_size,
                             long long boundary_vertex_count = -1);

}  // namespace disciso
