#pragma once

#include <array>
#include <optional>

#include "disciso/planar_map.hpp"

namespace disciso {

// Convex lattice hexagon, sides listed in boundary order.  Sides may
// degenerate (zero length) at most once; closure in the triangular lattice
// requires a1+a2 = a4+a5, a2+a3 = a5+a6, a3+a4 = a6+a1.
struct HexagonSpec {
  std::array<int, 6> sides;

  // Throws ValidationError on closure violation, more than one zero side,
  // or perimeter < 3.
  void check() const;
  int perimeter() const;
};

struct BallSpec {
  int degree = 6;   // delta >= 6
  int radius = 0;   // R >= 0
};

// Triangular-lattice hexagon as a combinatorial map.  All internal degrees
// are exactly 6 and V = (s+1)(s+2)/2 - sum of ai(ai+1)/2 over the odd sides,
// s = a1+a2+a3.
DiscTriangulation build_hexagon(const HexagonSpec& spec);

// Closed-form vertex count of build_hexagon for a feasible spec.
long long hexagon_vertex_formula(const HexagonSpec& spec);

// Maximal-volume boundary-n lattice shape: the best closure-feasible side
// tuple with entries near n/6 (degenerating to triangles, trapezoids and
// fans for small n).  Ties broken by canonical code.
DiscTriangulation build_extremal(int n);
std::array<int, 6> extremal_sides(int n);  // all -1 when a fan won

// Ball of the given radius in the delta-regular triangulation, grown
// annulus by annulus around a root vertex (vertex 0).  Throws Error if the
// vertex count would exceed vertex_cap.
DiscTriangulation build_regular_ball(const BallSpec& spec,
                                     long long vertex_cap = 2'000'000);

// Triangular-lattice ball; alias of build_regular_ball({6, radius}).
DiscTriangulation build_lattice_patch(int radius);

// Raised when a face of length >= 4 has all candidate diagonals already
// present as edges elsewhere in the map.
struct CompletionStuck : Error {
  using Error::Error;
};

// Completes a simple disc map to a triangulation by inserting diagonals
// inside faces only; vertex set, boundary, and all original edges are kept.
DiscTriangulation triangulate_simple_map(const DiscMap& map);

}  // namespace disciso
