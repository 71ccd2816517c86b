#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "disciso/builders.hpp"
#include "disciso/render.hpp"
#include "helpers.hpp"

using namespace disciso;
using namespace disciso::testing;

namespace {

int count_of(const std::string& hay, const std::string& needle) {
  int k = 0;
  for (size_t at = hay.find(needle); at != std::string::npos;
       at = hay.find(needle, at + needle.size()))
    ++k;
  return k;
}

}  // namespace

TEST_CASE("triangle renders with three vertices and one face") {
  auto r = render_svg(triangle());
  CHECK(r.crossings == 0);
  CHECK(count_of(r.svg, "<circle") == 3);
  CHECK(count_of(r.svg, "<polygon") == 1);
  CHECK(count_of(r.svg, "<line") == 3);
}

TEST_CASE("hexagon(2^6) shows three depth bands") {
  auto r = render_svg(build_hexagon({{2, 2, 2, 2, 2, 2}}));
  CHECK(r.crossings == 0);
  // Faces at stripping rounds 0 and 1; vertex dots at depths 0, 1, 2.
  CHECK(count_of(r.svg, "#dce9f7") > 0);
  CHECK(count_of(r.svg, "#b7d3ee") > 0);
  CHECK(count_of(r.svg, "#8fb8e0") == 0);
  CHECK(count_of(r.svg, "#b91c1c") == 12);
  CHECK(count_of(r.svg, "#1d4ed8") == 6);
  CHECK(count_of(r.svg, "#172554") == 1);
}

TEST_CASE("ball(7,2) draws without crossings") {
  auto r = render_svg(build_regular_ball({7, 2}));
  CHECK(r.crossings == 0);
  CHECK(count_of(r.svg, "<circle") == 29);
}

TEST_CASE("fan layout when V = n") {
  auto r = render_svg(fan(8), false);
  CHECK(r.crossings == 0);
  CHECK(count_of(r.svg, "<circle") == 8);
}

TEST_CASE("deterministic output") {
  auto a = render_svg(build_extremal(13));
  auto b = render_svg(build_extremal(13));
  CHECK(a.svg == b.svg);
}

TEST_CASE("degenerate inputs are rejected") {
  auto v1 = DiscTriangulation::validate({{}}, {0});
  CHECK_THROWS_AS(render_svg(v1), InputError);
}
