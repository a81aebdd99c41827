#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <string>

#include "arcforge/render.hpp"
#include "arcforge/surface.hpp"
#include "arcforge/system.hpp"
#include "doctest.h"

using namespace arcforge;

namespace {

int count_of(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (size_t at = hay.find(needle); at != std::string::npos;
       at = hay.find(needle, at + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("hexagon system drawing contains one element per feature") {
  const auto& T = standard_fixture("torus-2-marked");
  ArcSystem hex = construct_hexagon_system(T);
  std::string svg = render_svg(T, hex);

  CHECK(svg.rfind("<svg ", 0) == 0);
  CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
  CHECK(count_of(svg, "<polygon class=\"t\"") == T.ntri);
  CHECK(count_of(svg, "<path class=\"a\"") == 12);
  CHECK(count_of(svg, "<circle class=\"p\"") == T.nvertices);
  long long crossings = 0;
  for (size_t i = 0; i < hex.members.size(); ++i)
    for (size_t j = i + 1; j < hex.members.size(); ++j)
      crossings += hex.matrix[i][j];
  CHECK(count_of(svg, "<circle class=\"x\"") == crossings);
  CHECK(svg.find("nan") == std::string::npos);
  CHECK(svg.find("inf") == std::string::npos);

  // every chord of an arc with c crossings appears as one line segment
  int segments = 0;
  for (const ArcClass& a : hex.members)
    segments += a.edge_arc ? 1 : a.crossings() + 1;
  CHECK(count_of(svg, "M") == segments);
  CHECK(count_of(svg, "L") == segments);
}

TEST_CASE("empty system still draws the skeleton") {
  const auto& T = standard_fixture("torus-1-marked");
  std::string svg = render_svg(T, make_system(T, T.name, {}, 1));
  CHECK(count_of(svg, "<polygon class=\"t\"") == 2);
  CHECK(count_of(svg, "<path class=\"a\"") == 0);
  CHECK(count_of(svg, "<circle class=\"p\"") == 1);
  CHECK(count_of(svg, "<circle class=\"x\"") == 0);
}

TEST_CASE("output is byte-stable") {
  const auto& T = standard_fixture("torus-2-marked");
  ArcSystem hex = construct_hexagon_system(T);
  CHECK(render_svg(T, hex) == render_svg(T, hex));
}

TEST_CASE("surface mismatch is rejected") {
  const auto& t1 = standard_fixture("torus-1-marked");
  const auto& t2 = standard_fixture("torus-2-marked");
  ArcSystem s = make_system(t1, t1.name, {}, 1);
  CHECK_THROWS_AS(render_svg(t2, s), std::invalid_argument);
}
