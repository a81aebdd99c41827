#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <stdexcept>

#include "arcforge/arc.hpp"
#include "arcforge/surface.hpp"
#include "arcforge/system.hpp"
#include "doctest.h"

using namespace arcforge;

namespace {

// Reference maximal-clique enumerator: test every vertex subset.  Only for
// graphs small enough that 2^n stays cheap.
std::vector<std::vector<int>> brute_cliques(
    const std::vector<boost::dynamic_bitset<>>& adj, int floor_size) {
  int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) verts.push_back(v);
    if (static_cast<int>(verts.size()) < floor_size) continue;
    bool clique = true;
    for (size_t i = 0; i < verts.size() && clique; ++i)
      for (size_t j = i + 1; j < verts.size() && clique; ++j)
        if (!adj[verts[i]][verts[j]]) clique = false;
    if (!clique) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (mask & (1u << v)) continue;
      bool extends = true;
      for (int u : verts)
        if (!adj[u][v]) {
          extends = false;
          break;
        }
      if (extends) maximal = false;
    }
    if (maximal) out.push_back(verts);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CompatibilityGraph graph_from_adj(std::vector<boost::dynamic_bitset<>> adj) {
  CompatibilityGraph g;
  g.n = static_cast<int>(adj.size());
  g.adj = std::move(adj);
  g.matrix.assign(g.n, std::vector<long long>(g.n, 0));
  return g;
}

}  // namespace

TEST_CASE("clique search against exhaustive enumeration") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + static_cast<int>(rng() % 12);
    double density = 0.2 + 0.06 * (rng() % 11);
    std::vector<boost::dynamic_bitset<>> adj(n, boost::dynamic_bitset<>(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((rng() % 1000) / 1000.0 < density) {
          adj[i][j] = true;
          adj[j][i] = true;
        }
    int floor_size = 1 + static_cast<int>(rng() % 4);
    auto expect = brute_cliques(adj, floor_size);
    auto got = maximum_cliques(graph_from_adj(adj), floor_size);
    CHECK(got == expect);
  }
}

TEST_CASE("clique search on the empty and complete graphs") {
  std::vector<boost::dynamic_bitset<>> none(5, boost::dynamic_bitset<>(5));
  auto isolated = maximum_cliques(graph_from_adj(none), 1);
  CHECK(isolated.size() == 5);  // five singletons

  std::vector<boost::dynamic_bitset<>> full(5, boost::dynamic_bitset<>(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j) full[i][j] = true;
  auto whole = maximum_cliques(graph_from_adj(full), 1);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0] == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(maximum_cliques(graph_from_adj(full), 6).empty());
}

TEST_CASE("make_system canonicalizes and enforces the bound") {
  const auto& T = standard_fixture("torus-1-marked");
  auto pool = enumerate_arcs(T, 1);
  // a reversal alias names the same class: rejected as a duplicate
  CHECK_THROWS_AS(make_system(T, T.name, {pool[3], reversed(T, pool[3])}, 1),
                  std::invalid_argument);
  ArcSystem s = make_system(T, T.name, {reversed(T, pool[3])}, 1);
  CHECK(s.members.size() == 1);
  CHECK(s.members[0] == pool[3]);  // stored canonically

  // slopes 2/1 and 1/2 cross twice: fine at k=2, rejected at k=1
  std::vector<ArcClass> pair;
  for (const ArcClass& a : pool) {
    auto sl = identify_slope(T, a);
    if (sl == std::pair<long long, long long>{2, 1} ||
        sl == std::pair<long long, long long>{1, 2})
      pair.push_back(a);
  }
  REQUIRE(pair.size() == 2);
  CHECK(make_system(T, T.name, pair, 2).matrix[0][1] == 2);
  CHECK_THROWS_AS(make_system(T, T.name, pair, 1), std::invalid_argument);

  std::pair<int, int> witness{-1, -1};
  CHECK_FALSE(is_k_system(T, pair, 1, &witness));
  CHECK(witness == std::pair<int, int>{0, 1});
  CHECK(is_k_system(T, pair, 2));
}

TEST_CASE("system_from_pool slices the pool matrix") {
  const auto& T = standard_fixture("torus-2-marked");
  auto pool = enumerate_arcs(T, 3);
  auto m = intersection_matrix(T, pool);
  CompatibilityGraph g = build_compatibility_graph(T, pool, 1);
  CHECK(g.matrix == m);
  auto cliques = maximum_cliques(g, 4);
  REQUIRE(!cliques.empty());
  const auto& idx = cliques.front();
  ArcSystem s = system_from_pool(T, pool, m, idx, 1);
  CHECK(s.members.size() == idx.size());
  for (size_t i = 0; i < idx.size(); ++i) {
    CHECK(s.members[i] == pool[idx[i]]);
    for (size_t j = 0; j < idx.size(); ++j)
      CHECK(s.matrix[i][j] == m[idx[i]][idx[j]]);
  }
  // mirrors make_system on the same members
  ArcSystem direct = make_system(T, T.name, s.members, 1);
  CHECK(direct.members == s.members);
  CHECK(direct.matrix == s.matrix);

  CHECK_THROWS_AS(system_from_pool(T, pool, m, {2, 1}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(system_from_pool(T, pool, m, {0, 1000}, 1),
                  std::invalid_argument);
}

TEST_CASE("once-marked torus: every maximal 1-system has four arcs") {
  const auto& T = standard_fixture("torus-1-marked");
  auto pool = enumerate_arcs(T, 4);
  CompatibilityGraph g = build_compatibility_graph(T, pool, 1);
  auto cliques = maximum_cliques(g, 1);
  for (const auto& c : cliques) CHECK(c.size() == 4);
}

TEST_CASE("hexagon construction") {
  const auto& T = standard_fixture("torus-2-marked");
  ArcSystem hex = construct_hexagon_system(T);
  CHECK(hex.members.size() == 12);
  CHECK(hex.k == 1);
  CHECK(std::is_sorted(hex.members.begin(), hex.members.end(), arc_less));
  long long total = 0;
  for (size_t i = 0; i < hex.members.size(); ++i)
    for (size_t j = i + 1; j < hex.members.size(); ++j) {
      CHECK(hex.matrix[i][j] <= 1);
      total += hex.matrix[i][j];
    }
  // six boundary sides cross nothing; every 4-subset of hexagon corners
  // contributes one crossing pair of diagonals: C(6,4) = 15
  CHECK(total == 15);
  CHECK(non_intersecting_subset(hex).size() == 3);

  CHECK_THROWS_AS(construct_hexagon_system(standard_fixture("torus-1-marked")),
                  std::invalid_argument);
}

TEST_CASE("saturation detects extendable systems") {
  const auto& T = standard_fixture("torus-2-marked");
  auto pool = enumerate_arcs(T, 6);
  ArcSystem hex = construct_hexagon_system(T);
  CHECK(is_saturated(T, hex, pool));

  ArcSystem partial = make_system(
      T, T.name, {hex.members.begin(), hex.members.begin() + 4}, 1);
  int witness = -1;
  CHECK_FALSE(is_saturated(T, partial, pool, 1, &witness));
  REQUIRE(witness >= 0);
  // the witness extends the system within the bound
  std::vector<ArcClass> extended = partial.members;
  extended.push_back(pool[witness]);
  CHECK(is_k_system(T, extended, 1));
  CHECK(extended.back().crossings() <= 6);
}
