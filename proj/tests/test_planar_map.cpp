#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "disciso/planar_map.hpp"
#include "helpers.hpp"

using namespace disciso;
using namespace disciso::testing;

TEST_CASE("triangle validates with the smallest counts") {
  auto t = triangle();
  auto c = counts(t);
  CHECK(c.vertices == 3);
  CHECK(c.edges == 3);
  CHECK(c.faces == 1);
  CHECK(c.boundary == 3);
  CHECK(c.profile.internal_vertex_count == 0);
}

TEST_CASE("side-1 hexagon counts") {
  auto t = hexagon1();
  auto c = counts(t);
  CHECK(c.vertices == 7);
  CHECK(c.edges == 12);
  CHECK(c.faces == 6);
  CHECK(c.boundary == 6);
  CHECK(c.profile.internal_vertex_count == 1);
  CHECK(c.profile.internal_degree_sum == 6);
  CHECK(c.profile.min_internal_degree == 6);
}

TEST_CASE("degenerate single vertex and single edge") {
  auto v1 = DiscTriangulation::validate({{}}, {0});
  CHECK(v1.vertex_count() == 1);
  CHECK(v1.edge_count() == 0);
  auto v2 = DiscTriangulation::validate({{1}, {0}}, {0, 1});
  CHECK(v2.vertex_count() == 2);
  CHECK(v2.edge_count() == 1);
  CHECK(v2.boundary_length() == 2);
  CHECK(v2.internal_face_count() == 0);
}

TEST_CASE("validation rejects bad structures") {
  // Repeated boundary vertex.
  CHECK_THROWS_AS(DiscTriangulation::validate({{1, 2}, {2, 0}, {0, 1}},
                                              {0, 1, 2, 1}),
                  ValidationError);
  // Loop.
  CHECK_THROWS_AS(DiscTriangulation::validate({{0, 1}, {0}}, {0, 1}),
                  ValidationError);
  // Repeated neighbor.
  CHECK_THROWS_AS(
      DiscTriangulation::validate({{1, 1, 2}, {2, 0}, {0, 1}}, {0, 1, 2}),
      ValidationError);
  // Missing boundary edge.
  CHECK_THROWS_AS(DiscTriangulation::validate({{1}, {0}, {}}, {0, 1, 2}),
                  ValidationError);
  // Square with no diagonal: inner face has length 4.
  CHECK_THROWS_AS(DiscTriangulation::validate(
                      {{1, 3}, {2, 0}, {3, 1}, {0, 2}}, {0, 1, 2, 3}),
                  ValidationError);
  // Disconnected (triangle + far vertex) cannot even form a boundary, so
  // use two triangles sharing nothing: ids 0..5, boundary only first.
  CHECK_THROWS_AS(DiscTriangulation::validate({{1, 2},
                                               {2, 0},
                                               {0, 1},
                                               {4, 5},
                                               {5, 3},
                                               {3, 4}},
                                              {0, 1, 2}),
                  ValidationError);
}

TEST_CASE("face tracing matches orientation conventions") {
  auto t = square_fan();
  REQUIRE(t.internal_face_count() == 2);
  // Each face is a counterclockwise triple containing the diagonal 0-2.
  for (const auto& f : t.internal_faces()) {
    std::set<Vertex> s(f.begin(), f.end());
    CHECK(s.size() == 3);
    CHECK(s.count(0) + s.count(2) == 2);
  }
}

TEST_CASE("tri.json round trip") {
  auto t = hexagon1();
  std::string s = serialize(t);
  auto t2 = parse_triangulation(s);
  CHECK(serialize(t2) == s);
  CHECK(canonical_code(t2) == canonical_code(t));

  SUBCASE("tampering with one rotation entry is detected") {
    std::string bad = s;
    // The center's rotation is [0,1,2,3,4,5]; swap two entries so the
    // embedding breaks (faces no longer triangles).
    auto pos = bad.rfind("[0,1,2,3,4,5]");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 13, "[1,0,2,3,4,5]");
    CHECK_THROWS_AS(parse_triangulation(bad), ValidationError);
  }
}

TEST_CASE("parse errors carry InputError") {
  CHECK_THROWS_AS(parse_triangulation("{"), InputError);
  CHECK_THROWS_AS(parse_triangulation("{\"format\":\"nope\"}"), InputError);
  CHECK_THROWS_AS(
      parse_triangulation(
          "{\"format\":\"disc-tri/1\",\"boundary\":[0],\"rotations\":3}"),
      InputError);
}

TEST_CASE("canonical code is invariant under relabeling and mirroring") {
  for (const DiscTriangulation& t :
       {triangle(), square_fan(), fan(6), hexagon1()}) {
    std::string code = canonical_code(t);
    CHECK(code == canonical_code(t.mirrored()));
    for (unsigned seed : {1u, 2u, 3u}) {
      auto perm = random_permutation(t.vertex_count(), seed);
      CHECK(canonical_code(t.relabeled(perm)) == code);
    }
  }
}

TEST_CASE("the two diagonals of a square give equal codes") {
  auto a = square_fan();
  // Same square with the other diagonal (1-3).
  auto b = DiscTriangulation::validate(
      {{1, 3}, {2, 3, 0}, {3, 1}, {0, 1, 2}}, {0, 1, 2, 3});
  CHECK(canonical_code(a) == canonical_code(b));
  CHECK(aligned_isomorphic(a, b));
}

TEST_CASE("codes separate non-isomorphic instances") {
  CHECK(canonical_code(triangle()) != canonical_code(square_fan()));
  CHECK(canonical_code(fan(6)) != canonical_code(hexagon1()));
  CHECK_FALSE(aligned_isomorphic(fan(6), hexagon1()));
}

TEST_CASE("alignment oracle agrees with codes on small fixtures") {
  std::vector<DiscTriangulation> fixtures;
  fixtures.push_back(triangle());
  fixtures.push_back(square_fan());
  fixtures.push_back(fan(5));
  fixtures.push_back(fan(6));
  fixtures.push_back(hexagon1());
  for (size_t i = 0; i < fixtures.size(); ++i) {
    for (size_t j = 0; j < fixtures.size(); ++j) {
      bool same_code =
          canonical_code(fixtures[i]) == canonical_code(fixtures[j]);
      CHECK(same_code == aligned_isomorphic(fixtures[i], fixtures[j]));
    }
  }
}

TEST_CASE("disc map validation accepts larger faces") {
  // Plain square, no diagonal: a valid map, not a triangulation.
  auto m = DiscMap::validate({{1, 3}, {2, 0}, {3, 1}, {0, 2}}, {0, 1, 2, 3});
  CHECK(m.edge_count() == 4);
  REQUIRE(m.internal_faces().size() == 1);
  CHECK(m.internal_faces()[0].size() == 4);
}
