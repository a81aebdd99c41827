#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "arcforge/arc.hpp"
#include "arcforge/classify.hpp"
#include "arcforge/json_io.hpp"
#include "arcforge/surface.hpp"
#include "arcforge/system.hpp"
#include "doctest.h"

using namespace arcforge;

namespace {

ArcSystem slope_system(const IdealTriangulation& T,
                       const std::vector<std::pair<long long, long long>>& slopes,
                       int k) {
  auto pool = enumerate_arcs(T, 8);
  std::map<std::pair<long long, long long>, ArcClass> by_slope;
  for (const ArcClass& a : pool) by_slope.emplace(identify_slope(T, a), a);
  std::vector<ArcClass> members;
  for (auto s : slopes) members.push_back(by_slope.at(s));
  return make_system(T, T.name, members, k);
}

}  // namespace

TEST_CASE("ribbon graph of two disjoint loops through the marked point") {
  const auto& T = standard_fixture("torus-1-marked");
  ArcSystem s = slope_system(T, {{1, 0}, {0, 1}}, 1);
  RibbonGraph rg = system_to_ribbon_graph(T, s);
  CHECK(rg.nmarked == 1);
  CHECK(rg.nvertices() == 1);
  CHECK(rg.nedges() == 2);
  CHECK(rg.nfaces() == 1);
  CHECK(verify_filling(rg, T));
}

TEST_CASE("ribbon graph of two loops crossing once") {
  const auto& T = standard_fixture("torus-1-marked");
  ArcSystem s = slope_system(T, {{1, 1}, {-1, 1}}, 1);
  RibbonGraph rg = system_to_ribbon_graph(T, s);
  CHECK(rg.nmarked == 1);
  CHECK(rg.nvertices() == 2);  // marked point + one crossing
  CHECK(rg.nedges() == 4);
  CHECK(rg.nfaces() == 2);
  CHECK(verify_filling(rg, T));

  // different from the disjoint pair
  ArcSystem d = slope_system(T, {{1, 0}, {0, 1}}, 1);
  CHECK(canonical_code(rg) != canonical_code(system_to_ribbon_graph(T, d)));
}

TEST_CASE("a single arc never fills") {
  const auto& T = standard_fixture("torus-2-marked");
  ArcClass e;
  e.edge_arc = true;
  e.edge = T.edge_of({0, 0});
  RibbonGraph rg =
      system_to_ribbon_graph(T, make_system(T, T.name, {e}, 1));
  CHECK_FALSE(verify_filling(rg, T));
  CHECK_THROWS_WITH_AS(
      (void)classify(T, {make_system(T, T.name, {e}, 1)}),
      "classification aborted: system 0 is not filling", std::runtime_error);
}

TEST_CASE("codes are hex text and stable across member order") {
  const auto& T = standard_fixture("torus-2-marked");
  ArcSystem hex = construct_hexagon_system(T);
  std::string code = canonical_code(system_to_ribbon_graph(T, hex));
  CHECK(!code.empty());
  CHECK(code.size() % 2 == 0);
  for (char c : code) CHECK(std::isxdigit(static_cast<unsigned char>(c)));

  // feeding the members in any order produces the same system and code
  std::vector<ArcClass> shuffled(hex.members.rbegin(), hex.members.rend());
  ArcSystem again = make_system(T, T.name, shuffled, 1);
  CHECK(canonical_code(system_to_ribbon_graph(T, again)) == code);
  CHECK(canonical_code(system_to_ribbon_graph(T, hex)) == code);  // repeatable
}

TEST_CASE("classify groups equal systems and fills the class record") {
  const auto& T = standard_fixture("torus-2-marked");
  ArcSystem hex = construct_hexagon_system(T);
  auto classes = classify(T, {hex, hex, hex});
  REQUIRE(classes.size() == 1);
  const SystemClass& c = classes[0];
  CHECK(c.count == 3);
  CHECK(c.size == 12);
  CHECK(c.j_size == 3);
  CHECK(c.crossings == 15);
  CHECK(c.representative.members == hex.members);
  CHECK(c.code == canonical_code(system_to_ribbon_graph(T, hex)));
  // loop tally agrees with the member endpoints
  std::vector<int> expect(T.nvertices, 0);
  for (const ArcClass& m : hex.members) {
    auto [x, y] = endpoints(T, m);
    if (x == y) expect[x]++;
  }
  std::sort(expect.begin(), expect.end());
  CHECK(c.loops == expect);
}

TEST_CASE("classification separates the once-marked pairs") {
  const auto& T = standard_fixture("torus-1-marked");
  ArcSystem a = slope_system(T, {{1, 0}, {0, 1}}, 1);
  ArcSystem b = slope_system(T, {{1, 1}, {-1, 1}}, 1);
  ArcSystem c = slope_system(T, {{1, 0}, {1, 1}}, 1);  // also disjoint
  auto classes = classify(T, {a, b, c, a});
  REQUIRE(classes.size() == 2);
  int total = 0;
  for (const auto& cl : classes) total += cl.count;
  CHECK(total == 4);
  // the two disjoint pairs are homeomorphic systems, the crossing pair not
  std::vector<int> counts;
  for (const auto& cl : classes) counts.push_back(cl.count);
  std::sort(counts.begin(), counts.end());
  CHECK(counts == std::vector<int>{1, 3});
}

TEST_CASE("a serialized copy lands in the same class") {
  const auto& T = standard_fixture("torus-2-marked");
  auto pool = enumerate_arcs(T, 6);
  CompatibilityGraph g = build_compatibility_graph(T, pool, 1);
  auto cliques = maximum_cliques(g, 12);
  REQUIRE(cliques.size() >= 2);
  ArcSystem s0 = system_from_pool(T, pool, g.matrix, cliques[0], 1);
  ArcSystem s1 = system_from_pool(T, pool, g.matrix, cliques[1], 1);
  ArcSystem copy = system_from_json(T, system_to_json(T, s0));
  CHECK(copy.members == s0.members);
  auto classes = classify(T, {s0, s1, copy});
  int total = 0;
  bool saw_pair = false;
  for (const auto& cl : classes) {
    total += cl.count;
    CHECK(cl.size == 12);
    if (cl.count >= 2) saw_pair = true;
    CHECK(verify_filling(system_to_ribbon_graph(T, cl.representative), T));
  }
  CHECK(total == 3);
  CHECK(saw_pair);  // the copy joins its original
}

TEST_CASE("thread count never changes the classification") {
  const auto& T = standard_fixture("torus-2-marked");
  auto pool = enumerate_arcs(T, 6);
  CompatibilityGraph g = build_compatibility_graph(T, pool, 1);
  auto cliques = maximum_cliques(g, 12);
  std::vector<ArcSystem> systems;
  for (size_t i = 0; i < cliques.size() && i < 40; ++i)
    systems.push_back(system_from_pool(T, pool, g.matrix, cliques[i], 1));
  auto c1 = classify(T, systems, 1);
  auto c4 = classify(T, systems, 4);
  REQUIRE(c1.size() == c4.size());
  for (size_t i = 0; i < c1.size(); ++i) {
    CHECK(c1[i].code == c4[i].code);
    CHECK(c1[i].count == c4[i].count);
    CHECK(c1[i].amphichiral == c4[i].amphichiral);
    CHECK(c1[i].swap_symmetric == c4[i].swap_symmetric);
  }
}
