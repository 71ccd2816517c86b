#pragma once

#include <string>
#include <vector>

#include "disciso/planar_map.hpp"

namespace disciso {

// One stripped-off component of the remainder, relabeled 0..V-1.
// original_ids maps piece labels back to vertex ids of the stripped input.
// boundary_edges is the piece's contribution to n' (bridges count 2, an
// isolated vertex would count 0 but is reported separately).
struct StripComponent {
  DiscTriangulation piece;
  std::vector<Vertex> original_ids;
  long long boundary_edges = 0;
};

// Outcome of stripping one layer: all boundary vertices and all faces
// incident to them are removed; stripped faces are classified by their
// boundary-vertex and boundary-edge incidences.
struct StripReport {
  long long V = 0, n = 0, E = 0;
  DegreeProfile profile;

  // |M|: internal edges incident to the boundary, counted once per boundary
  // endpoint (a chord between two boundary vertices counts twice).
  long long m = 0;

  long long alpha = 0;              // boundary edge + internal apex
  long long gamma = 0;              // two boundary vertices via chord + apex
  long long beta[4] = {0, 0, 0, 0}; // three boundary vertices, i boundary edges
  long long new_boundary_faces = 0; // exactly one boundary vertex

  // Boundary edges of the stripped complex, bridges counted twice.
  long long n_prime = 0;

  std::vector<StripComponent> components;  // discs and bridges, split at cut vertices
  std::vector<Vertex> isolated_ids;        // vertex-only components
  long long isolated_vertices = 0;
};

StripReport strip_layer(const DiscTriangulation& t);

// One verified equality or inequality, with both sides evaluated exactly.
// hard identities must hold for every valid input; soft ones are the
// degree-hypothesis bounds, whose violation is a finding, not a failure.
struct IdentityCheck {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;
  bool is_equality = true;  // otherwise checks lhs <= rhs
  bool checked = true;      // false when the guard excluded this instance
  bool holds = true;
  bool hard = true;
};

// Verifies, in exact integer arithmetic:
//   - degree-sum form 2E = sum(internal degrees) + 2n + m and the closed form
//     m = 2n - 6 - (sigma - 6)(V - n)           [hard, V >= 3]
//   - 2m = 2n' + 2a + 4g + 6b0 + 4b1 + 2b2 and n = a + b1 + 2b2 + 3b3  [hard]
//   - n' equals the number of one-boundary-vertex faces, and the distinct
//     remainder vertices account for V - n                               [hard]
//   - m <= 2n-6, n' <= n-6, b2 <= b1 + 3b0 + 2g    [soft; min internal degree
//     >= 6 and V >= 6]
//   - n' <= n - 6 - (delta-6)(V-n)                 [soft; min internal degree
//     = delta >= 7]
std::vector<IdentityCheck> verify_strip_identities(const DiscTriangulation& t,
                                                   const StripReport& r);

bool all_hard_hold(const std::vector<IdentityCheck>& checks);
bool all_soft_hold(const std::vector<IdentityCheck>& checks);

// Full layer decomposition: strips every component recursively until
// nothing is left, recording per-depth totals.  The per-depth vertex count
// is cross-checked against graph distances from the boundary.
struct LayerRow {
  int depth = 0;
  long long boundary_edges = 0;  // total over the pieces at this depth
  long long vertices = 0;        // distinct vertices at this depth
  long long allowed = 0;         // (n - 6k)^+
  bool excess = false;
};

struct LayerDecomposition {
  std::vector<LayerRow> layers;
  long long total_vertices = 0;
  bool any_excess = false;
};

LayerDecomposition layer_decomposition(const DiscTriangulation& t);

}  // namespace disciso
