#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace disciso {

using Vertex = std::int32_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON, unknown format tag, ids out of range.
struct InputError : Error {
  using Error::Error;
};

// Structurally well-formed input that violates a disc-triangulation
// invariant (non-simple boundary, non-triangular face, Euler mismatch...).
struct ValidationError : Error {
  using Error::Error;
};

// Exact degree statistics. sigma (average internal degree) is kept as the
// exact pair (internal_degree_sum, internal_vertex_count); it is undefined
// when there are no internal vertices.
struct DegreeProfile {
  int internal_vertex_count = 0;
  long long internal_degree_sum = 0;
  int min_internal_degree = 0;  // meaningful only if internal_vertex_count > 0
  int min_degree_overall = 0;

  bool sigma_defined() const { return internal_vertex_count > 0; }
};

// A triangulated disc as a rotation system: per-vertex counterclockwise
// neighbor cycles plus the boundary cycle traversed with the interior on the
// left.  Immutable after validation; all operations on it are pure.
//
// Degenerate maps are admitted because layer stripping produces them:
// V=1 (single vertex, boundary [v], no edges) and V=2 (single edge, boundary
// [u,v], whose closed boundary walk traverses the edge twice, so n = 2).
class DiscTriangulation {
 public:
  // Validates and takes ownership.  Throws ValidationError with the
  // offending vertex/face on any invariant violation.
  static DiscTriangulation validate(std::vector<std::vector<Vertex>> rotations,
                                    std::vector<Vertex> boundary);

  int vertex_count() const { return static_cast<int>(rotations_.size()); }
  long long edge_count() const { return edge_count_; }
  long long internal_face_count() const {
    return static_cast<long long>(faces_.size());
  }
  int boundary_length() const { return static_cast<int>(boundary_.size()); }

  const std::vector<Vertex>& boundary() const { return boundary_; }
  const std::vector<std::vector<Vertex>>& rotations() const {
    return rotations_;
  }
  const std::vector<Vertex>& neighbors(Vertex v) const {
    return rotations_[static_cast<size_t>(v)];
  }
  int degree(Vertex v) const {
    return static_cast<int>(rotations_[static_cast<size_t>(v)].size());
  }
  bool is_boundary(Vertex v) const {
    return boundary_flag_[static_cast<size_t>(v)];
  }
  bool adjacent(Vertex u, Vertex v) const;

  // Internal faces as counterclockwise triples, in traced order.
  const std::vector<std::array<Vertex, 3>>& internal_faces() const {
    return faces_;
  }

  DegreeProfile degree_profile() const;

  // Mirror image: all rotations reversed, boundary reversed (interior stays
  // on the left of the traversed boundary).
  DiscTriangulation mirrored() const;

  // Applies a vertex permutation: vertex v becomes perm[v].
  DiscTriangulation relabeled(const std::vector<Vertex>& perm) const;

 private:
  DiscTriangulation() = default;

  std::vector<std::vector<Vertex>> rotations_;
  std::vector<Vertex> boundary_;
  std::vector<char> boundary_flag_;
  std::vector<std::array<Vertex, 3>> faces_;
  long long edge_count_ = 0;
};

// ---------------------------------------------------------------------------
// General disc maps (internal faces of any length >= 3).  Used as the input
// side of triangulation completion; shares the file format and the embedding
// conventions of DiscTriangulation.

class DiscMap {
 public:
  static DiscMap validate(std::vector<std::vector<Vertex>> rotations,
                          std::vector<Vertex> boundary);

  int vertex_count() const { return static_cast<int>(rotations_.size()); }
  long long edge_count() const { return edge_count_; }
  int boundary_length() const { return static_cast<int>(boundary_.size()); }
  const std::vector<Vertex>& boundary() const { return boundary_; }
  const std::vector<std::vector<Vertex>>& rotations() const {
    return rotations_;
  }
  // Internal faces as counterclockwise simple cycles.
  const std::vector<std::vector<Vertex>>& internal_faces() const {
    return faces_;
  }

 private:
  friend class DiscTriangulation;
  DiscMap() = default;

  std::vector<std::vector<Vertex>> rotations_;
  std::vector<Vertex> boundary_;
  std::vector<std::vector<Vertex>> faces_;
  long long edge_count_ = 0;
};

// ---------------------------------------------------------------------------
// Serialization: the `.tri.json` format
//   { "format": "disc-tri/1", "boundary": [int,...], "rotations": [[int,...],...] }

DiscTriangulation parse_triangulation(const std::string& json_text);
DiscMap parse_disc_map(const std::string& json_text);
std::string serialize(const DiscTriangulation& t);
std::string serialize_map(const std::vector<std::vector<Vertex>>& rotations,
                          const std::vector<Vertex>& boundary);

// ---------------------------------------------------------------------------
// Canonical form.  Equal codes <=> isomorphic as boundary-respecting maps up
// to rotation and reflection of the disc.  Defined as the lexicographic
// minimum over all 2n boundary-rooted oriented starts of a breadth-first
// relabeling encoding of the rotation system; rendered as space-separated
// decimal integers.

std::string canonical_code(const DiscTriangulation& t);

// Rebuilds a triangulation from a canonical code (label 0 is a boundary
// vertex, each rotation is listed anchored at its BFS parent).  The result
// has canonical_code(decode_code(c)) == c.
DiscTriangulation decode_code(const std::string& code);

// Exact counts record used by reports.
struct Counts {
  long long vertices = 0;
  long long edges = 0;
  long long faces = 0;
  long long boundary = 0;
  DegreeProfile profile;
};

// Returns exact counts and asserts the three Euler-derived identities
// (V - E + F = 1, 3F = 2E - n, E = 3V - n - 3) for V >= 3.
Counts counts(const DiscTriangulation& t);

}  // namespace disciso
