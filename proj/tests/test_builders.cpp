#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "disciso/builders.hpp"
#include "helpers.hpp"

using namespace disciso;
using namespace disciso::testing;

TEST_CASE("hexagon spec validation") {
  CHECK_NOTHROW(HexagonSpec{{1, 1, 1, 1, 1, 1}}.check());
  CHECK_NOTHROW(HexagonSpec{{0, 2, 1, 1, 1, 2}}.check());
  // Closure failures.
  CHECK_THROWS_AS(HexagonSpec({{1, 1, 1, 1, 2, 1}}).check(), ValidationError);
  CHECK_THROWS_AS(HexagonSpec({{1, 1, 1, 1, 1, 2}}).check(), ValidationError);
  CHECK_THROWS_AS(HexagonSpec({{0, 0, 0, 0, 0, 0}}).check(), ValidationError);
  CHECK_THROWS_AS(HexagonSpec({{0, 1, 0, 1, 0, 1}}).check(), ValidationError);
}

TEST_CASE("unit hexagon is the wheel on six spokes") {
  auto t = build_hexagon({{1, 1, 1, 1, 1, 1}});
  auto c = counts(t);
  CHECK(c.vertices == 7);
  CHECK(c.boundary == 6);
  CHECK(canonical_code(t) == canonical_code(hexagon1()));
}

TEST_CASE("pentagon-shaped hexagon with one zero side") {
  auto t = build_hexagon({{0, 2, 1, 1, 1, 2}});
  CHECK(t.vertex_count() == 8);
  CHECK(t.boundary_length() == 7);
}

TEST_CASE("side-2 hexagon counts") {
  auto t = build_hexagon({{2, 2, 2, 2, 2, 2}});
  auto c = counts(t);
  CHECK(c.vertices == 19);
  CHECK(c.edges == 42);
  CHECK(c.faces == 24);
  CHECK(c.boundary == 12);
  CHECK(c.profile.internal_degree_sum == 6 * 7);
  CHECK(c.profile.min_internal_degree == 6);
}

TEST_CASE("hexagon vertex formula matches lattice-point counting") {
  // Every feasible spec of perimeter <= 40: a5, a6 are determined by
  // closure, so sweep the first four sides.
  int tested = 0;
  for (int a1 = 0; a1 <= 12; ++a1)
    for (int a2 = 0; a2 <= 12; ++a2)
      for (int a3 = 0; a3 <= 12; ++a3)
        for (int a4 = 0; a4 <= 12; ++a4) {
          int a5 = a1 + a2 - a4;
          int a6 = a3 + a4 - a1;
          if (a5 < 0 || a6 < 0) continue;
          HexagonSpec spec{{a1, a2, a3, a4, a5, a6}};
          int zeros = 0;
          for (int s : spec.sides) zeros += s == 0 ? 1 : 0;
          if (zeros > 1 || spec.perimeter() < 3 || spec.perimeter() > 40)
            continue;
          auto t = build_hexagon(spec);
          CHECK(t.vertex_count() == hexagon_vertex_formula(spec));
          CHECK(t.boundary_length() == spec.perimeter());
          auto profile = t.degree_profile();
          if (profile.internal_vertex_count > 0)
            CHECK(profile.min_internal_degree == 6);
          // All internal degrees exactly 6.
          if (profile.internal_vertex_count > 0)
            CHECK(profile.internal_degree_sum ==
                  6 * profile.internal_vertex_count);
          ++tested;
        }
  CHECK(tested > 300);
}

TEST_CASE("extremal shapes at pinned sizes") {
  CHECK(build_extremal(3).vertex_count() == 3);
  CHECK(build_extremal(4).vertex_count() == 4);
  CHECK(build_extremal(5).vertex_count() == 5);
  CHECK(build_extremal(6).vertex_count() == 7);

  auto e7 = build_extremal(7);
  CHECK(e7.vertex_count() == 8);
  CHECK(canonical_code(e7) == canonical_code(build_hexagon({{0, 2, 1, 1, 1, 2}})));

  auto e12 = build_extremal(12);
  CHECK(e12.vertex_count() == 19);

  auto e13 = build_extremal(13);
  CHECK(e13.vertex_count() == 21);
  CHECK(canonical_code(e13) ==
        canonical_code(build_hexagon({{1, 3, 2, 2, 2, 3}})));

  // The extremal side recipe for n = 6k+7.
  auto s7 = extremal_sides(7);
  std::multiset<int> got7(s7.begin(), s7.end());
  CHECK(got7 == std::multiset<int>{0, 2, 1, 1, 1, 2});

  // Feasibility across a range, including n = 5 mod 6.
  for (int n = 3; n <= 25; ++n) {
    auto t = build_extremal(n);
    CHECK(t.boundary_length() == n);
    CHECK(t.vertex_count() >= n);
  }
  CHECK(build_extremal(11).vertex_count() == 16);
}

TEST_CASE("regular balls") {
  SUBCASE("radius 0 and 1") {
    CHECK(build_regular_ball({7, 0}).vertex_count() == 1);
    auto b = build_regular_ball({7, 1});
    CHECK(b.vertex_count() == 8);
    CHECK(b.boundary_length() == 7);
  }
  SUBCASE("delta 6 balls match hexagons") {
    for (int r = 1; r <= 6; ++r) {
      auto ball = build_regular_ball({6, r});
      HexagonSpec spec{{r, r, r, r, r, r}};
      CHECK(canonical_code(ball) == canonical_code(build_hexagon(spec)));
      CHECK(ball.vertex_count() == 1 + 3 * r * (r + 1));
    }
  }
  SUBCASE("delta 7 radius 1 counts") {
    auto c = counts(build_regular_ball({7, 1}));
    CHECK(c.vertices == 8);
    CHECK(c.edges == 14);
    CHECK(c.faces == 7);
    CHECK(c.boundary == 7);
    CHECK(c.profile.internal_degree_sum == 7);
  }
  SUBCASE("delta 7 radius 2") {
    auto b = build_regular_ball({7, 2});
    CHECK(b.vertex_count() == 29);
    CHECK(b.boundary_length() == 21);
    auto profile = b.degree_profile();
    CHECK(profile.min_internal_degree == 7);
    CHECK(profile.internal_degree_sum == 7 * profile.internal_vertex_count);
  }
  SUBCASE("larger hyperbolic balls validate") {
    for (int delta : {7, 8, 9}) {
      auto b = build_regular_ball({delta, 3});
      auto c = counts(b);
      CHECK(c.profile.min_internal_degree == delta);
    }
  }
  SUBCASE("cap") {
    CHECK_THROWS_AS(build_regular_ball({7, 10}, 1000), Error);
  }
}

TEST_CASE("lattice patch alias") {
  CHECK(build_lattice_patch(1).vertex_count() == 7);
  CHECK(build_lattice_patch(2).vertex_count() == 19);
  CHECK(build_lattice_patch(3).vertex_count() == 37);
  CHECK(canonical_code(build_lattice_patch(2)) ==
        canonical_code(build_regular_ball({6, 2})));
}

TEST_CASE("triangulation completion") {
  SUBCASE("already a triangulation is unchanged") {
    auto t = hexagon1();
    auto m = parse_disc_map(serialize(t));
    auto done = triangulate_simple_map(m);
    CHECK(serialize(done) == serialize(t));
  }
  SUBCASE("square gets one diagonal") {
    auto m = DiscMap::validate({{1, 3}, {2, 0}, {3, 1}, {0, 2}}, {0, 1, 2, 3});
    auto done = triangulate_simple_map(m);
    CHECK(done.vertex_count() == 4);
    CHECK(done.internal_face_count() == 2);
    CHECK(done.edge_count() == 5);
  }
  SUBCASE("pentagon gets two diagonals") {
    auto m = DiscMap::validate(
        {{1, 4}, {2, 0}, {3, 1}, {4, 2}, {0, 3}}, {0, 1, 2, 3, 4});
    auto done = triangulate_simple_map(m);
    CHECK(done.vertex_count() == 5);
    CHECK(done.internal_face_count() == 3);
    CHECK(done.edge_count() == 7);
    CHECK(done.edge_count() == 3 * 5 - 5 - 3);
  }
  SUBCASE("original edges survive and degrees only grow") {
    auto m = DiscMap::validate(
        {{1, 5}, {2, 0}, {3, 1}, {4, 2}, {5, 3}, {0, 4}}, {0, 1, 2, 3, 4, 5});
    auto done = triangulate_simple_map(m);
    for (Vertex u = 0; u < 6; ++u) {
      for (Vertex w : m.rotations()[static_cast<size_t>(u)])
        CHECK(done.adjacent(u, w));
      CHECK(done.degree(u) >=
            static_cast<int>(m.rotations()[static_cast<size_t>(u)].size()));
    }
  }
}
