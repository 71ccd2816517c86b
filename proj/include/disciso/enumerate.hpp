#pragma once

#include <string>
#include <vector>

#include "disciso/planar_map.hpp"

namespace disciso {

// Instance space: all disc triangulations with boundary length n whose
// internal degrees are all >= delta_min, up to boundary-respecting
// isomorphism, with at most vertex_cap vertices.
struct EnumSpec {
  int n = 3;
  int delta_min = 6;
  long long vertex_cap = 0;  // 0: default to weil_bound(n) + 2
  bool collect = true;       // keep the full sorted catalog
  int threads = 1;
};

struct EnumResult {
  EnumSpec spec;
  long long cap = 0;            // cap actually used
  long long labeled_count = 0;  // completed labeled triangulations
  long long class_count = 0;    // isomorphism classes
  long long max_v = -1;
  std::vector<std::string> codes;           // sorted catalog (if collect)
  std::vector<std::string> extremal_codes;  // classes attaining max_v
  long long cap_pruned = 0;  // fresh-vertex branches cut by the cap
  // The catalog is complete for V <= cap.  cap_hit signals that max_v may
  // not be final: some branch was cut by the cap AND the maximum found sits
  // inside the top window [cap-1, cap].
  bool cap_hit = false;
};

// Exhaustive generation by recursive ear filling over pocket boundaries,
// with exact degree pruning, a sound Euler-based completability prune, and
// canonical-code isomorph rejection at emission.  Deterministic output for
// any thread count.
EnumResult enumerate_triangulations(const EnumSpec& spec);

// Cap-escalation protocol: start at weil_bound(n) + 2, re-run with cap + 2
// while cap_hit, at most escalation_limit extra rounds.  decided is false
// when the protocol ran out of rounds.
struct MaxVolumeResult {
  int n = 0;
  int delta_min = 6;
  long long max_v = -1;
  bool decided = false;
  std::vector<long long> cap_history;
  std::vector<std::string> extremal_codes;
  long long class_count = 0;
};

MaxVolumeResult max_volume(int n, int delta_min, int escalation_limit = 2,
                           int threads = 1);

}  // namespace disciso
