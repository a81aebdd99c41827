#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <stdexcept>

#include "arcforge/arc.hpp"
#include "arcforge/cut.hpp"
#include "arcforge/surface.hpp"
#include "arcforge/system.hpp"
#include "doctest.h"

using namespace arcforge;

namespace {

ArcClass edge_class(int e) {
  ArcClass a;
  a.edge_arc = true;
  a.edge = e;
  return a;
}

Rat chi_sum(const CutResult& r) {
  Rat s(0);
  for (const SurfaceInvariants& c : r.components) s += c.chi();
  return s;
}

}  // namespace

TEST_CASE("cutting along nothing returns the surface") {
  const auto& T = standard_fixture("torus-2-marked");
  CutResult r = cut_along(T, make_system(T, T.name, {}, 1));
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0] == SurfaceInvariants{1, 0, 2, 0});
  CHECK(r.boundary_marked_total == 0);
}

TEST_CASE("one separating-type arc at a time") {
  const auto& T = standard_fixture("torus-2-marked");

  // an edge joining the two marked points: the torus opens to a
  // one-boundary torus with both endpoint copies on the boundary
  int nonloop = T.edge_of({0, 0});
  {
    auto ends = T.slots_of(nonloop)[0];
    int va = T.vertex_at({ends.tri, mod3(ends.side + 1)});
    int vb = T.vertex_at({ends.tri, mod3(ends.side + 2)});
    REQUIRE(va != vb);
  }
  CutResult r1 = cut_along(T, make_system(T, T.name, {edge_class(nonloop)}, 1));
  REQUIRE(r1.components.size() == 1);
  CHECK(r1.components[0] == SurfaceInvariants{1, 1, 0, 2});
  CHECK(chi_sum(r1) == T.euler_characteristic());

  // a loop based at one marked point: the torus opens to a cylinder, the
  // other marked point stays interior
  int loop = T.edge_of({0, 2});
  {
    auto ends = T.slots_of(loop)[0];
    int va = T.vertex_at({ends.tri, mod3(ends.side + 1)});
    int vb = T.vertex_at({ends.tri, mod3(ends.side + 2)});
    REQUIRE(va == vb);
  }
  CutResult r2 = cut_along(T, make_system(T, T.name, {edge_class(loop)}, 1));
  REQUIRE(r2.components.size() == 1);
  CHECK(r2.components[0] == SurfaceInvariants{0, 2, 1, 2});
  CHECK(chi_sum(r2) == T.euler_characteristic());
}

TEST_CASE("hexagon cut set opens the surface to a hexagonal disk") {
  const auto& T = standard_fixture("torus-2-marked");
  ArcSystem hex = construct_hexagon_system(T);
  auto j = non_intersecting_subset(hex);
  REQUIRE(j.size() == 3);
  std::vector<ArcClass> cut_arcs;
  for (int i : j) cut_arcs.push_back(hex.members[i]);
  CutResult r = cut_along(T, make_system(T, T.name, cut_arcs, 0));
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0] == SurfaceInvariants{0, 1, 0, 6});
  CHECK(r.boundary_marked_total == 6);
  CHECK(chi_sum(r) == T.euler_characteristic());
}

TEST_CASE("six disjoint arcs cut the surface into the four triangles") {
  const auto& T = standard_fixture("torus-2-marked");
  auto pool = enumerate_arcs(T, 10);
  CompatibilityGraph g = build_compatibility_graph(T, pool, 0);
  auto cliques = maximum_cliques(g, 6);
  REQUIRE(!cliques.empty());
  for (const auto& c : cliques) CHECK(c.size() == 6);
  CutResult r = cut_along(
      T, system_from_pool(T, pool, g.matrix, cliques.front(), 0));
  REQUIRE(r.components.size() == 4);
  for (const SurfaceInvariants& piece : r.components)
    CHECK(piece == SurfaceInvariants{0, 1, 0, 3});
  CHECK(chi_sum(r) == T.euler_characteristic());
}

TEST_CASE("cut preserves the marked Euler characteristic") {
  const auto& T = standard_fixture("torus-2-marked");
  auto pool = enumerate_arcs(T, 4);
  CompatibilityGraph g = build_compatibility_graph(T, pool, 0);
  auto families = maximum_cliques(g, 2);
  REQUIRE(families.size() > 10);
  for (size_t n = 0; n < families.size(); n += 7) {
    ArcSystem s = system_from_pool(T, pool, g.matrix, families[n], 0);
    CutResult r = cut_along(T, s);
    CHECK(chi_sum(r) == T.euler_characteristic());
    long long pieces_v = 0;
    for (const auto& c : r.components) pieces_v += c.v;
    CHECK(pieces_v == r.boundary_marked_total);
    CHECK(r.boundary_marked_total >= 2);  // each cut end leaves a copy
  }
}

TEST_CASE("crossing members are rejected") {
  const auto& T = standard_fixture("torus-1-marked");
  auto pool = enumerate_arcs(T, 1);
  std::vector<ArcClass> crossing;
  for (const ArcClass& a : pool) {
    auto sl = identify_slope(T, a);
    if (sl == std::pair<long long, long long>{2, 1} ||
        sl == std::pair<long long, long long>{1, 2})
      crossing.push_back(a);
  }
  REQUIRE(crossing.size() == 2);
  ArcSystem s = make_system(T, T.name, crossing, 2);
  CHECK_THROWS_AS(cut_along(T, s), std::invalid_argument);
}

TEST_CASE("complement connectivity") {
  const auto& T = standard_fixture("torus-2-marked");
  ArcSystem hex = construct_hexagon_system(T);
  auto j = non_intersecting_subset(hex);
  std::vector<ArcClass> cut_arcs;
  for (int i : j) cut_arcs.push_back(hex.members[i]);
  CHECK(complement_is_connected(T, make_system(T, T.name, cut_arcs, 0)));

  // the six-arc disjoint family cuts the surface into four pieces
  auto pool = enumerate_arcs(T, 6);
  CompatibilityGraph g = build_compatibility_graph(T, pool, 0);
  auto cliques = maximum_cliques(g, 6);
  REQUIRE(!cliques.empty());
  CHECK_FALSE(complement_is_connected(
      T, system_from_pool(T, pool, g.matrix, cliques.front(), 0)));
}
