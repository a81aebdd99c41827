#include "arcforge/system.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "arcforge/layout.hpp"
#include "arcforge/parallel.hpp"

namespace arcforge {

std::vector<std::vector<long long>> intersection_matrix(
    const IdealTriangulation& T, const std::vector<ArcClass>& arcs, int threads) {
  const int n = static_cast<int>(arcs.size());
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  std::vector<long long> val(pairs.size());
  parallel_for(static_cast<long long>(pairs.size()), threads, [&](long long p) {
    val[p] = geometric_intersection(T, arcs[pairs[p].first], arcs[pairs[p].second]);
  });
  for (size_t p = 0; p < pairs.size(); ++p)
    m[pairs[p].first][pairs[p].second] = m[pairs[p].second][pairs[p].first] = val[p];
  return m;
}

bool is_k_system(const IdealTriangulation& T, const std::vector<ArcClass>& arcs,
                 int k, std::pair<int, int>* witness) {
  const int n = static_cast<int>(arcs.size());
  std::vector<ArcClass> canon(n);
  for (int i = 0; i < n; ++i) canon[i] = canonical(T, arcs[i]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (canon[i] == canon[j] || geometric_intersection(T, arcs[i], arcs[j]) > k) {
        if (witness) *witness = {i, j};
        return false;
      }
    }
  return true;
}

ArcSystem make_system(const IdealTriangulation& T, const std::string& surface_name,
                      std::vector<ArcClass> members, int k, int threads) {
  ArcSystem s;
  s.surface = surface_name;
  s.k = k;
  for (ArcClass& a : members) a = canonical(T, a);
  std::sort(members.begin(), members.end(), arc_less);
  for (size_t i = 0; i + 1 < members.size(); ++i)
    if (members[i] == members[i + 1])
      throw std::invalid_argument("make_system: duplicate member class");
  s.members = std::move(members);
  s.matrix = intersection_matrix(T, s.members, threads);
  for (size_t i = 0; i < s.members.size(); ++i)
    for (size_t j = i + 1; j < s.members.size(); ++j)
      if (s.matrix[i][j] > k)
        throw std::invalid_argument("make_system: pair exceeds the intersection bound");
  return s;
}

ArcSystem system_from_pool(const IdealTriangulation& T,
                           const std::vector<ArcClass>& pool,
                           const std::vector<std::vector<long long>>& matrix,
                           const std::vector<int>& indices, int k) {
  ArcSystem s;
  s.surface = T.name;
  s.k = k;
  const int n = static_cast<int>(indices.size());
  s.members.reserve(n);
  for (const int i : indices) {
    if (i < 0 || i >= static_cast<int>(pool.size()))
      throw std::invalid_argument("system_from_pool: index out of range");
    if (!s.members.empty() && !arc_less(s.members.back(), pool[i]))
      throw std::invalid_argument("system_from_pool: indices not ascending");
    s.members.push_back(pool[i]);
  }
  s.matrix.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      s.matrix[i][j] = matrix[indices[i]][indices[j]];
      if (i != j && s.matrix[i][j] > k)
        throw std::invalid_argument(
            "system_from_pool: pair exceeds the intersection bound");
    }
  return s;
}

CompatibilityGraph build_compatibility_graph(const IdealTriangulation& T,
                                             const std::vector<ArcClass>& pool,
                                             int k, int threads) {
  CompatibilityGraph g;
  g.n = static_cast<int>(pool.size());
  g.k = k;
  g.matrix = intersection_matrix(T, pool, threads);
  g.adj.assign(g.n, boost::dynamic_bitset<>(g.n));
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (i != j && g.matrix[i][j] <= k) g.adj[i].set(j);
  return g;
}

namespace {

// Bron–Kerbosch with pivoting; branches below floor_size are cut off since
// a clique extending R can only use vertices still in P.
struct CliqueSearch {
  const CompatibilityGraph& g;
  int floor_size;
  std::vector<std::vector<int>> found;
  std::vector<int> R;
  using Bits = boost::dynamic_bitset<>;

  void expand(const Bits& P, const Bits& X) {
    if (P.none() && X.none()) {
      if (static_cast<int>(R.size()) >= floor_size) {
        found.push_back(R);
        std::sort(found.back().begin(), found.back().end());
      }
      return;
    }
    if (static_cast<int>(R.size() + P.count()) < floor_size) return;
    Bits PX = P | X;
    size_t pivot = PX.find_first();
    size_t best = (P & g.adj[pivot]).count();
    for (size_t u = PX.find_next(pivot); u != Bits::npos; u = PX.find_next(u)) {
      size_t d = (P & g.adj[u]).count();
      if (d > best) {
        best = d;
        pivot = u;
      }
    }
    Bits cand = P & ~g.adj[pivot];
    Bits Pcur = P, Xcur = X;
    for (size_t v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
      R.push_back(static_cast<int>(v));
      expand(Pcur & g.adj[v], Xcur & g.adj[v]);
      R.pop_back();
      Pcur.reset(v);
      Xcur.set(v);
    }
  }
};

}  // namespace

std::vector<std::vector<int>> maximum_cliques(const CompatibilityGraph& g,
                                              int floor_size) {
  if (floor_size < 1) throw std::invalid_argument("maximum_cliques: floor < 1");
  CliqueSearch cs{g, floor_size, {}, {}};
  boost::dynamic_bitset<> P(g.n), X(g.n);
  P.set();
  if (g.n > 0) cs.expand(P, X);
  std::sort(cs.found.begin(), cs.found.end());
  for (size_t i = 0; i + 1 < cs.found.size(); ++i)
    if (cs.found[i] == cs.found[i + 1])
      throw std::logic_error("maximum_cliques: duplicate clique emitted");
  return cs.found;
}

std::vector<int> non_intersecting_subset(const ArcSystem& s) {
  std::vector<int> J;
  for (size_t i = 0; i < s.members.size(); ++i) {
    bool clean = true;
    for (size_t j = 0; j < s.members.size() && clean; ++j)
      if (s.matrix[i][j] != 0) clean = false;
    if (clean) J.push_back(static_cast<int>(i));
  }
  return J;
}

bool is_saturated(const IdealTriangulation& T, const ArcSystem& s,
                  const std::vector<ArcClass>& pool, int threads, int* witness) {
  const long long n = static_cast<long long>(pool.size());
  std::vector<char> extends(n, 0);
  parallel_for(n, threads, [&](long long i) {
    ArcClass c = canonical(T, pool[i]);
    for (const ArcClass& m : s.members)
      if (c == m) return;
    for (const ArcClass& m : s.members)
      if (geometric_intersection(T, c, m) >= 2) return;
    extends[i] = 1;
  });
  for (long long i = 0; i < n; ++i)
    if (extends[i]) {
      if (witness) *witness = static_cast<int>(i);
      return false;
    }
  return true;
}

ArcSystem construct_hexagon_system(const IdealTriangulation& T) {
  const int E = T.num_edges();
  if (T.ntri != 4 || E != 6 || T.nvertices != 2)
    throw std::invalid_argument("hexagon construction: expects the 4-triangle two-vertex fixture");

  // first 3-edge subset (lex order) whose removal leaves a spanning tree of
  // the triangles: cutting along those three arcs opens the surface to a disk
  std::vector<int> cut;
  std::vector<int> kept;
  for (int a = 0; a < E && cut.empty(); ++a)
    for (int b = a + 1; b < E && cut.empty(); ++b)
      for (int c = b + 1; c < E && cut.empty(); ++c) {
        std::vector<int> uf(T.ntri);
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](int x) {
          while (uf[x] != x) x = uf[x] = uf[uf[x]];
          return x;
        };
        bool tree = true;
        int comps = T.ntri;
        for (int e = 0; e < E && tree; ++e) {
          if (e == a || e == b || e == c) continue;
          int u = find(T.slots_of(e)[0].tri), v = find(T.slots_of(e)[1].tri);
          if (u == v)
            tree = false;
          else {
            uf[u] = v;
            --comps;
          }
        }
        if (tree && comps == 1) cut = {a, b, c};
      }
  if (cut.empty())
    throw std::logic_error("hexagon construction: no tree-forming cut found");
  auto is_cut = [&](int e) {
    return e == cut[0] || e == cut[1] || e == cut[2];
  };
  for (int e = 0; e < E; ++e)
    if (!is_cut(e)) kept.push_back(e);

  // corner sectors of the disk: identify corners across the kept gluings
  std::vector<int> cuf(3 * T.ntri);
  std::iota(cuf.begin(), cuf.end(), 0);
  auto cfind = [&](int x) {
    while (cuf[x] != x) x = cuf[x] = cuf[cuf[x]];
    return x;
  };
  auto cunite = [&](int x, int y) { cuf[cfind(x)] = cfind(y); };
  for (int e : kept) {
    Slot s0 = T.slots_of(e)[0], s1 = T.slots_of(e)[1];
    cunite(3 * s0.tri + mod3(s0.side + 1), 3 * s1.tri + mod3(s1.side + 2));
    cunite(3 * s0.tri + mod3(s0.side + 2), 3 * s1.tri + mod3(s1.side + 1));
  }
  std::vector<int> roots;
  for (int x = 0; x < 3 * T.ntri; ++x)
    if (cfind(x) == x) roots.push_back(x);
  if (roots.size() != 6)
    throw std::logic_error("hexagon construction: cut is not a hexagon");
  auto cls = [&](int t, int c) {
    int r = cfind(3 * t + c);
    return static_cast<int>(std::lower_bound(roots.begin(), roots.end(), r) -
                            roots.begin());
  };

  // polygon sides: each cut edge contributes its two slot copies
  std::vector<std::vector<char>> adjacent(6, std::vector<char>(6, 0));
  int nsides = 0;
  for (int e : cut)
    for (const Slot& s : T.slots_of(e)) {
      int u = cls(s.tri, mod3(s.side + 1)), v = cls(s.tri, mod3(s.side + 2));
      if (u == v) throw std::logic_error("hexagon construction: degenerate side");
      if (!adjacent[u][v]) nsides++;
      adjacent[u][v] = adjacent[v][u] = 1;
    }
  if (nsides != 6)
    throw std::logic_error("hexagon construction: boundary is not a 6-cycle");

  // dual tree of the disk, with the slot leading out of each triangle
  std::vector<std::vector<std::pair<int, Slot>>> nbr(T.ntri);
  for (int e : kept) {
    Slot s0 = T.slots_of(e)[0], s1 = T.slots_of(e)[1];
    nbr[s0.tri].push_back({s1.tri, s0});
    nbr[s1.tri].push_back({s0.tri, s1});
  }
  std::vector<std::vector<int>> dist(T.ntri, std::vector<int>(T.ntri, -1));
  std::vector<std::vector<Slot>> step_toward(
      T.ntri, std::vector<Slot>(T.ntri));  // first slot on the path u -> target
  for (int target = 0; target < T.ntri; ++target) {
    std::queue<int> q;
    dist[target][target] = 0;
    q.push(target);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (auto [v, out_of_u] : nbr[u])
        if (dist[v][target] < 0) {
          dist[v][target] = dist[u][target] + 1;
          step_toward[v][target] = T.glue(out_of_u);  // v's slot facing u
          q.push(v);
        }
    }
  }

  std::vector<ArcClass> members;
  for (int e : cut) {
    ArcClass a;
    a.edge_arc = true;
    a.edge = e;
    members.push_back(a);
  }

  // one diagonal per non-adjacent vertex pair, routed along the dual tree
  // between the closest corner representatives
  int ndiag = 0;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) {
      if (adjacent[u][v]) continue;
      ndiag++;
      int best = -1;
      Corner cu{}, cv{};
      for (int x = 0; x < 3 * T.ntri; ++x) {
        if (cls(x / 3, x % 3) != u) continue;
        for (int y = 0; y < 3 * T.ntri; ++y) {
          if (cls(y / 3, y % 3) != v) continue;
          int d = dist[x / 3][y / 3];
          if (best < 0 || d < best) {
            best = d;
            cu = {x / 3, x % 3};
            cv = {y / 3, y % 3};
          }
        }
      }
      RawPath p;
      p.start = cu;
      p.end_corner = cv.corner;
      for (int t = cu.tri; t != cv.tri; t = T.glue(step_toward[t][cv.tri]).tri)
        p.outs.push_back(step_toward[t][cv.tri]);
      members.push_back(tighten(T, p));
    }
  if (ndiag != 9)
    throw std::logic_error("hexagon construction: wrong diagonal count");

  return make_system(T, T.name, std::move(members), 1);
}

}  // namespace arcforge
