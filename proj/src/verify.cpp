#include "arcforge/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arcforge/arc.hpp"
#include "arcforge/classify.hpp"
#include "arcforge/cut.hpp"
#include "arcforge/formulas.hpp"
#include "arcforge/json_io.hpp"
#include "arcforge/layout.hpp"
#include "arcforge/surface.hpp"
#include "arcforge/system.hpp"

namespace arcforge {

namespace {

// Everything the torus-2 search produces at one crossing bound.
struct SearchBundle {
  std::vector<ArcClass> pool;
  CompatibilityGraph graph;
  std::vector<std::vector<int>> cliques;
  std::vector<ArcSystem> systems;
  std::vector<SystemClass> classes;
};

SearchBundle run_search(const IdealTriangulation& T, int bound, int threads) {
  SearchBundle b;
  b.pool = enumerate_arcs(T, bound);
  b.graph = build_compatibility_graph(T, b.pool, 1, threads);
  b.cliques = maximum_cliques(b.graph, 12);
  b.systems.reserve(b.cliques.size());
  for (const auto& c : b.cliques)
    b.systems.push_back(system_from_pool(T, b.pool, b.graph.matrix, c, 1));
  b.classes = classify(T, b.systems, threads);
  return b;
}

std::string plural(size_t n, const char* noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

}  // namespace

VerifyReport run_verification(int bound, int threads) {
  VerifyReport rep;
  auto add = [&rep](int id, const std::string& name, bool pass,
                    const std::string& detail) {
    rep.results.push_back({id, name, pass, detail});
  };

  const IdealTriangulation& T2 = standard_fixture("torus-2-marked");
  const IdealTriangulation& T1 = standard_fixture("torus-1-marked");
  const int b1 = bound, b2 = bound + 2;

  std::optional<SearchBundle> s1, s2;
  std::string search_error;
  const auto tick = std::chrono::steady_clock::now();
  try {
    s1 = run_search(T2, b1, threads);
    s2 = run_search(T2, b2, threads);
  } catch (const std::exception& e) {
    search_error = e.what();
  }
  rep.search_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - tick)
          .count();

  // 1: the largest 1-system on the twice-marked torus has 12 members
  if (!s1 || !s2) {
    add(1, "largest-system", false, "search failed: " + search_error);
  } else {
    bool ok = !s1->cliques.empty() && !s2->cliques.empty();
    size_t biggest = 0;
    for (const auto* b : {&*s1, &*s2})
      for (const auto& c : b->cliques) biggest = std::max(biggest, c.size());
    ok = ok && biggest == 12;
    std::ostringstream d;
    d << "bounds " << b1 << "/" << b2 << ": " << plural(s1->cliques.size(), "system")
      << " / " << plural(s2->cliques.size(), "system")
      << ", largest " << biggest << ", none larger than 12";
    add(1, "largest-system", ok, d.str());
  }

  // 2: exactly 23 equivalence classes, identical at both bounds
  if (!s1 || !s2) {
    add(2, "class-stability", false, "search failed: " + search_error);
  } else {
    std::vector<std::string> c1, c2;
    for (const auto& c : s1->classes) c1.push_back(c.code);
    for (const auto& c : s2->classes) c2.push_back(c.code);
    const bool stable = c1 == c2;
    const bool ok = c1.size() == 23 && stable;
    std::ostringstream d;
    d << c1.size() << " classes at bound " << b1 << ", " << c2.size()
      << " at bound " << b2
      << (stable ? ", identical codes" : "; bound not stabilized");
    add(2, "class-stability", ok, d.str());
  }

  // 3: multiplicities of the disjoint-subsystem sizes
  if (!s1) {
    add(3, "disjoint-subsystems", false, "search failed: " + search_error);
  } else {
    std::map<int, int> hist;
    for (const auto& c : s1->classes) ++hist[c.j_size];
    const std::map<int, int> want{{0, 3}, {1, 5}, {2, 12}, {3, 3}};
    std::ostringstream d;
    d << "|J| histogram";
    for (const auto& [j, n] : hist) d << " " << j << ":" << n;
    add(3, "disjoint-subsystems", hist == want, d.str());
  }

  // 4: the once-marked torus tops out at 4, with the standard quadruple
  try {
    const auto pool = enumerate_arcs(T1, std::max(bound, 4));
    const auto graph = build_compatibility_graph(T1, pool, 1, threads);
    const auto cliques = maximum_cliques(graph, 4);
    size_t biggest = 0;
    for (const auto& c : cliques) biggest = std::max(biggest, c.size());
    std::map<std::pair<long long, long long>, ArcClass> by_slope;
    for (const auto& a : pool) by_slope[identify_slope(T1, a)] = a;
    std::vector<ArcClass> quad;
    for (const auto& sl : std::vector<std::pair<long long, long long>>{
             {1, 1}, {-1, 1}, {1, 0}, {0, 1}})
      quad.push_back(by_slope.at(sl));
    const ArcSystem qs = make_system(T1, T1.name, quad, 1, threads);
    const bool maximal = is_saturated(T1, qs, pool, threads);
    std::ostringstream d;
    d << plural(cliques.size(), "maximal system") << " of size >= 4, largest "
      << biggest << "; slopes {1/1,-1/1,1/0,0/1} "
      << (maximal ? "maximal" : "extendable");
    add(4, "once-marked-torus", !cliques.empty() && biggest == 4 && maximal,
        d.str());
  } catch (const std::exception& e) {
    add(4, "once-marked-torus", false, e.what());
  }

  // 5: pairwise counts on the once-marked torus against the determinant rule
  try {
    const auto pool = enumerate_arcs(T1, std::max(bound, 11));
    std::map<std::pair<long long, long long>, ArcClass> by_slope;
    for (const auto& a : pool) {
      if (!by_slope.emplace(identify_slope(T1, a), a).second)
        throw std::logic_error("two arcs with one slope");
    }
    std::vector<std::pair<long long, long long>> slopes;
    for (long long p = -4; p <= 4; ++p)
      for (long long q = 0; q <= 4; ++q) {
        if (std::gcd(p, q) != 1) continue;
        if (q == 0 && p != 1) continue;
        slopes.emplace_back(p, q);
      }
    long long checked = 0;
    bool ok = true;
    std::ostringstream bad;
    for (size_t i = 0; i < slopes.size() && ok; ++i)
      for (size_t j = i; j < slopes.size() && ok; ++j) {
        const auto [p, q] = slopes[i];
        const auto [r, s] = slopes[j];
        const long long got = geometric_intersection(T1, by_slope.at(slopes[i]),
                                                     by_slope.at(slopes[j]));
        const long long want = slope_intersection(p, q, r, s);
        ++checked;
        if (got != want) {
          ok = false;
          bad << "; " << p << "/" << q << " vs " << r << "/" << s << ": got "
              << got << ", expected " << want;
        }
      }
    std::ostringstream d;
    d << checked << " slope pairs with entries up to 4 match" << bad.str();
    add(5, "slope-formula", ok, d.str());
  } catch (const std::exception& e) {
    add(5, "slope-formula", false, e.what());
  }

  // 6: disjoint systems of non-loop arcs max out at 4
  if (!s1) {
    add(6, "non-loop-disjoint", false, "search failed: " + search_error);
  } else {
    try {
      std::vector<ArcClass> nonloop;
      for (const auto& a : s1->pool) {
        const auto [u, v] = endpoints(T2, a);
        if (u != v) nonloop.push_back(a);
      }
      const auto graph = build_compatibility_graph(T2, nonloop, 0, threads);
      const auto cliques = maximum_cliques(graph, 4);
      size_t biggest = 0;
      for (const auto& c : cliques) biggest = std::max(biggest, c.size());
      std::ostringstream d;
      d << nonloop.size() << " non-loop arcs, largest disjoint family "
        << biggest;
      add(6, "non-loop-disjoint", !cliques.empty() && biggest == 4, d.str());
    } catch (const std::exception& e) {
      add(6, "non-loop-disjoint", false, e.what());
    }
  }

  // 7: a maximal disjoint system has 6 arcs and cuts into triangles
  if (!s1) {
    add(7, "disjoint-cut", false, "search failed: " + search_error);
  } else {
    try {
      const auto graph = build_compatibility_graph(T2, s1->pool, 0, threads);
      const auto cliques = maximum_cliques(graph, 6);
      size_t biggest = 0;
      for (const auto& c : cliques) biggest = std::max(biggest, c.size());
      bool ok = !cliques.empty() && biggest == 6;
      std::string shape = "no system";
      if (ok) {
        const ArcSystem sys =
            system_from_pool(T2, s1->pool, graph.matrix, cliques.front(), 0);
        const CutResult cut = cut_along(T2, sys);
        const SurfaceInvariants tri{0, 1, 0, 3};
        ok = static_cast<int>(cut.components.size()) == T2.ntri;
        for (const auto& c : cut.components) ok = ok && c == tri;
        std::ostringstream sh;
        sh << cut.components.size() << " pieces, all triangles: "
           << (ok ? "yes" : "no");
        shape = sh.str();
      }
      std::ostringstream d;
      d << "largest disjoint family " << biggest << "; first cut: " << shape;
      add(7, "disjoint-cut", ok, d.str());
    } catch (const std::exception& e) {
      add(7, "disjoint-cut", false, e.what());
    }
  }

  // 8: every found system: |J| <= 3, cut along J preserves chi, complement
  // connected
  if (!s1) {
    add(8, "cut-complement", false, "search failed: " + search_error);
  } else {
    try {
      bool ok = true;
      std::ostringstream bad;
      const Rat chi = T2.euler_characteristic();
      for (size_t i = 0; i < s1->systems.size() && ok; ++i) {
        const auto& sys = s1->systems[i];
        const auto j = non_intersecting_subset(sys);
        if (j.size() > 3) {
          ok = false;
          bad << "; system " << i << " has |J| = " << j.size();
          break;
        }
        std::vector<ArcClass> js;
        for (const int m : j) js.push_back(sys.members[m]);
        const ArcSystem jsys = make_system(T2, T2.name, js, 0);
        const CutResult cut = cut_along(T2, jsys);
        Rat total(0);
        for (const auto& c : cut.components) total += c.chi();
        if (total != chi) {
          ok = false;
          bad << "; system " << i << " cut chi mismatch";
          break;
        }
        if (!complement_is_connected(T2, jsys)) {
          ok = false;
          bad << "; system " << i << " disconnects the surface";
          break;
        }
      }
      std::ostringstream d;
      d << plural(s1->systems.size(), "system")
        << ": |J| <= 3, cut chi additive, complement connected" << bad.str();
      add(8, "cut-complement", ok, d.str());
    } catch (const std::exception& e) {
      add(8, "cut-complement", false, e.what());
    }
  }

  // 9: class representatives cannot be extended within the pool
  if (!s1) {
    add(9, "saturation", false, "search failed: " + search_error);
  } else {
    try {
      bool ok = true;
      std::ostringstream bad;
      for (size_t i = 0; i < s1->classes.size(); ++i) {
        int witness = -1;
        if (!is_saturated(T2, s1->classes[i].representative, s1->pool, threads,
                          &witness)) {
          ok = false;
          bad << "; class " << i << " extends by pool arc " << witness;
          break;
        }
      }
      std::ostringstream d;
      d << plural(s1->classes.size(), "representative")
        << " saturated against the pool" << bad.str();
      add(9, "saturation", ok, d.str());
    } catch (const std::exception& e) {
      add(9, "saturation", false, e.what());
    }
  }

  // 10: the hexagon construction lands in one of the |J| = 3 classes
  if (!s1) {
    add(10, "hexagon", false, "search failed: " + search_error);
  } else {
    try {
      const ArcSystem hex = construct_hexagon_system(T2);
      const RibbonGraph rg = system_to_ribbon_graph(T2, hex);
      const bool filling = verify_filling(rg, T2);
      const std::string code = canonical_code(rg);
      int hits = 0, j3 = 0;
      for (const auto& c : s1->classes)
        if (c.j_size == 3) {
          ++j3;
          if (c.code == code) ++hits;
        }
      std::ostringstream d;
      d << hex.members.size() << " members, filling " << (filling ? "yes" : "no")
        << ", code matches " << hits << " of " << j3 << " |J|=3 classes";
      add(10, "hexagon", filling && hits == 1 && hex.members.size() == 12,
          d.str());
    } catch (const std::exception& e) {
      add(10, "hexagon", false, e.what());
    }
  }

  // 11: byte-determinism across thread counts
  if (!s1) {
    add(11, "determinism", false, "search failed: " + search_error);
  } else {
    try {
      const int alt = threads == 1 ? 2 : 1;
      const auto g = build_compatibility_graph(T2, s1->pool, 1, alt);
      const bool mat_same = matrix_to_json(T2, s1->pool, g.matrix) ==
                            matrix_to_json(T2, s1->pool, s1->graph.matrix);
      const auto classes = classify(T2, s1->systems, alt);
      const bool cat_same = catalog_to_json(T2, classes) ==
                            catalog_to_json(T2, s1->classes);
      add(11, "determinism", mat_same && cat_same,
          std::string("matrix bytes ") + (mat_same ? "identical" : "differ") +
              ", catalog bytes " + (cat_same ? "identical" : "differ") +
              " across thread counts");
    } catch (const std::exception& e) {
      add(11, "determinism", false, e.what());
    }
  }

  rep.all_pass = true;
  std::ostringstream out;
  out << "verification at bounds " << b1 << " and " << b2 << "\n";
  for (const auto& r : rep.results) {
    rep.all_pass = rep.all_pass && r.pass;
    out << (r.pass ? "[PASS] " : "[FAIL] ");
    out.width(2);
    out.fill('0');
    out << r.id;
    out.width(0);
    out << " " << r.name << ": " << r.detail << "\n";
  }
  out << "result: " << (rep.all_pass ? "PASS" : "FAIL") << " ("
      << std::count_if(rep.results.begin(), rep.results.end(),
                       [](const CriterionResult& r) { return r.pass; })
      << "/" << rep.results.size() << ")\n";
  rep.text = out.str();
  return rep;
}

}  // namespace arcforge
