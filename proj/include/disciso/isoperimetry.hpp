#pragma once

#include <string>
#include <vector>

#include "disciso/bounds.hpp"
#include "disciso/planar_map.hpp"

namespace disciso {

// Number of ambient edges with exactly one endpoint in the subset.  Every
// subset vertex must be at graph distance >= required_margin from the patch
// boundary so the relevant degrees are ambient-correct; computed twice
// (direct cut count and degree sum minus twice the inside edges) and
// cross-checked on every call.
long long edge_boundary(const DiscTriangulation& patch,
                        const std::vector<Vertex>& subset,
                        int required_margin = 2);

// Exact minimal edge boundaries over connected lattice vertex sets
// ("animals"), enumerated exhaustively up to translation and the 12 lattice
// symmetries.  witness is the canonical cell list "q,r;q,r;..." of one
// minimizer.
struct AnimalRow {
  int volume = 0;
  long long min_boundary = 0;
  std::string witness;
  long long animal_classes = 0;  // symmetry classes of this size
};

struct AnimalTable {
  int v_max = 0;
  std::vector<AnimalRow> rows;             // rows[i] is volume i+1
  std::vector<BoundReport> bound_checks;   // |dA|^2 vs 48V per volume
};

// The patch is used to cross-verify each witness with edge_boundary; it
// must be a triangular-lattice ball large enough to embed every witness
// with margin 2 (build_lattice_patch(v_max + 2) suffices).
AnimalTable min_boundary_by_volume(const DiscTriangulation& patch, int v_max);

// Exact rational, reduced, den > 0.
struct Ratio {
  long long num = 0;
  long long den = 1;
  static Ratio of(long long num, long long den);
  friend bool operator<(const Ratio& a, const Ratio& b) {
    return a.num * b.den < b.num * a.den;
  }
  std::string str() const;
};

enum class ProfileFamily { kBalls, kConnectedSets };

// Coverage: does every radius-R ball around a deep-interior vertex contain
// a vertex of degree >= 7?  Profile: exact minimum of |dS|/|S| over the
// chosen family of interior subsets.
struct IsoProfile {
  int radius = 0;
  int degree_threshold = 7;
  bool coverage = true;
  long long balls_scanned = 0;
  ProfileFamily family = ProfileFamily::kBalls;
  int family_size_limit = 0;  // for kConnectedSets
  long long subsets_scanned = 0;
  Ratio min_ratio;
  std::vector<Vertex> argmin;
};

IsoProfile coverage_and_profile(const DiscTriangulation& t, int radius,
                                ProfileFamily family = ProfileFamily::kBalls,
                                int size_limit = 0);

}  // namespace disciso
