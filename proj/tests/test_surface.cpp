#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <stdexcept>

#include "arcforge/json_io.hpp"
#include "arcforge/surface.hpp"
#include "doctest.h"

using namespace arcforge;

TEST_CASE("fixture shapes") {
  const auto& t1 = standard_fixture("torus-1-marked");
  CHECK(t1.ntri == 2);
  CHECK(t1.num_edges() == 3);
  CHECK(t1.nvertices == 1);

  const auto& t2 = standard_fixture("torus-2-marked");
  CHECK(t2.ntri == 4);
  CHECK(t2.num_edges() == 6);
  CHECK(t2.nvertices == 2);

  CHECK(standard_fixture_names().size() == 2);
  CHECK_THROWS_AS(standard_fixture("klein-bottle"), std::invalid_argument);
}

TEST_CASE("marked invariants") {
  SurfaceInvariants t1 = standard_fixture("torus-1-marked").invariants();
  CHECK(t1.g == 1);
  CHECK(t1.b == 0);
  CHECK(t1.p == 1);
  CHECK(t1.v == 0);
  CHECK(t1.chi() == Rat(-1));

  SurfaceInvariants t2 = standard_fixture("torus-2-marked").invariants();
  CHECK(t2.g == 1);
  CHECK(t2.p == 2);
  CHECK(t2.chi() == Rat(-2));

  // boundary marked points count half
  SurfaceInvariants disk{0, 1, 0, 6};
  CHECK(disk.chi() == Rat(-2));
  CHECK(SurfaceInvariants{0, 2, 1, 2}.chi() == Rat(-2));
}

TEST_CASE("glue table is an involution and edges cover the slots") {
  for (const std::string& name : standard_fixture_names()) {
    const auto& T = standard_fixture(name);
    std::set<int> edge_ids;
    for (int t = 0; t < T.ntri; ++t)
      for (int s = 0; s < 3; ++s) {
        Slot here{t, s};
        Slot there = T.glue(here);
        CHECK(T.glue(there) == here);
        CHECK_FALSE(there == here);
        int e = T.edge_of(here);
        CHECK(e == T.edge_of(there));
        auto ends = T.slots_of(e);
        CHECK(((ends[0] == here && ends[1] == there) ||
               (ends[0] == there && ends[1] == here)));
        edge_ids.insert(e);
      }
    CHECK(static_cast<int>(edge_ids.size()) == T.num_edges());
    // closed surface: V - E + F is the topological Euler characteristic
    CHECK(T.nvertices - T.num_edges() + T.ntri == 2 - 2 * T.invariants().g);
  }
}

TEST_CASE("corner wedge orbits partition the corners by vertex") {
  for (const std::string& name : standard_fixture_names()) {
    const auto& T = standard_fixture(name);
    std::set<Corner> seen;
    for (int t = 0; t < T.ntri; ++t)
      for (int c = 0; c < 3; ++c) {
        Corner start{t, c};
        if (seen.count(start)) continue;
        int vertex = T.vertex_at(start);
        Corner cur = start;
        int steps = 0;
        do {
          CHECK(T.vertex_at(cur) == vertex);
          CHECK(seen.insert(cur).second);
          cur = T.next_wedge_ccw(cur);
          ++steps;
          REQUIRE(steps <= 3 * T.ntri);
        } while (!(cur == start));
      }
    CHECK(static_cast<int>(seen.size()) == 3 * T.ntri);
  }
}

TEST_CASE("triangulation json round-trip is the identity") {
  for (const std::string& name : standard_fixture_names()) {
    const auto& T = standard_fixture(name);
    std::string text = triangulation_to_json(T);
    CHECK(triangulation_from_json(text) == T);
    CHECK(triangulation_to_json(triangulation_from_json(text)) == text);
    CHECK(text.back() == '\n');
  }
  CHECK_THROWS(triangulation_from_json("{\"name\":\"x\"}"));
}

TEST_CASE("validate rejects broken tables") {
  IdealTriangulation T = standard_fixture("torus-1-marked");
  T.vertex_table[0][0] = 1 - T.vertex_table[0][0];  // breaks wedge constancy
  CHECK_THROWS_AS(T.validate(), std::invalid_argument);

  IdealTriangulation U = standard_fixture("torus-2-marked");
  std::swap(U.glue_table[0][0], U.glue_table[0][1]);  // no longer an involution
  CHECK_THROWS(U.validate());
}
