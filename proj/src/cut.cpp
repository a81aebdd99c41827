#include "arcforge/cut.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "arcforge/layout.hpp"

namespace arcforge {

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void unite(int x, int y) { up[find(x)] = find(y); }
};

}  // namespace

// The cut surface is assembled as a cell complex: each triangle falls apart
// into the regions its chords bound; regions reglue across the intervals of
// every triangulation edge between consecutive crossings; each crossing point
// splits into two copies and each marked point into one copy per angular
// sector between consecutive arc germs.
CutResult cut_along(const IdealTriangulation& T, const ArcSystem& b) {
  Layout L = make_layout(T, b.members);
  if (!L.crossings.empty())
    throw std::invalid_argument("cut_along: arcs are not pairwise disjoint");
  const int nt = T.ntri;
  const int nchords = static_cast<int>(L.chords.size());

  // --- regions of each triangle: chords nest, so a stack sweep suffices ---
  std::vector<std::vector<int>> chord_at(nt);
  for (int t = 0; t < nt; ++t) chord_at[t].assign(L.cycle_size[t], -1);
  for (int c = 0; c < nchords; ++c) {
    chord_at[L.chords[c].tri][L.chords[c].pos_entry] = c;
    chord_at[L.chords[c].tri][L.chords[c].pos_exit] = c;
  }
  int nregions = 0;
  std::vector<int> outer_region(nt), chord_region(nchords);
  for (int t = 0; t < nt; ++t) outer_region[t] = nregions++;
  for (int c = 0; c < nchords; ++c) chord_region[c] = nregions++;
  // region adjacent to the boundary gap between cycle positions p and p+1
  std::vector<std::vector<int>> half(nt);
  for (int t = 0; t < nt; ++t) {
    const int M = L.cycle_size[t];
    half[t].assign(M, outer_region[t]);
    std::vector<int> stack;
    std::vector<char> open(nchords, 0);
    for (int p = 0; p < M; ++p) {
      int c = chord_at[t][p];
      if (c < 0) throw std::logic_error("cycle position without a port");
      if (!open[c]) {
        open[c] = 1;
        stack.push_back(c);
      } else if (!stack.empty() && stack.back() == c) {
        stack.pop_back();
      } else {
        throw std::logic_error("chords interleave in a disjoint system");
      }
      half[t][p] = stack.empty() ? outer_region[t] : chord_region[stack.back()];
    }
    if (!stack.empty()) throw std::logic_error("unbalanced chord ports");
  }
  // flank region just below cycle position p (wrapping); M = 0 means the
  // whole triangle is one untouched region
  auto flank = [&](int t, int p) {
    const int M = L.cycle_size[t];
    if (M == 0) return outer_region[t];
    return half[t][((p % M) + M) % M];
  };

  // Every chord is entered heading into its triangle and exited heading out,
  // so its left flank is just below the entry port and just above the exit.
  for (int c = 0; c < nchords; ++c) {
    const auto& ch = L.chords[c];
    if (flank(ch.tri, ch.pos_entry - 1) != flank(ch.tri, ch.pos_exit) ||
        flank(ch.tri, ch.pos_entry) != flank(ch.tri, ch.pos_exit - 1))
      throw std::logic_error("chord flank regions disagree");
  }

  // --- reglue regions across the intervals of every edge ---
  UnionFind uf(nregions);
  long long nintervals = 0;
  for (int e = 0; e < T.num_edges(); ++e) {
    const int m = static_cast<int>(L.edge_events[e].size());
    Slot s0 = T.slots_of(e)[0], s1 = T.slots_of(e)[1];
    nintervals += m + 1;
    for (int k = 0; k <= m; ++k) {
      // interval k in reference order is interval m-k along the other slot
      int r0 = flank(s0.tri, L.side_start[s0.tri][s0.side] + k - 1);
      int r1 = flank(s1.tri, L.side_start[s1.tri][s1.side] + (m - k) - 1);
      uf.unite(r0, r1);
    }
  }

  // --- marked points: germ cycles, sectors, untouched points ---
  auto cycles = vertex_germ_cycles(L);
  // cycle position of a germ, and its component flank on the ccw side
  auto germ_pos = [&](const VertexGerm& g) {
    return L.fan_start[g.at.tri][g.at.corner] + g.fan_index;
  };
  struct SectorRef {
    int vertex;
    int index;  // gap following germ `index` in ccw order
    int region;
  };
  std::vector<SectorRef> sectors;
  std::vector<std::vector<int>> sector_of_gap(T.nvertices);
  std::vector<int> untouched_region;
  for (int v = 0; v < T.nvertices; ++v) {
    const auto& cyc = cycles[v];
    if (cyc.empty()) {
      // find any corner of this vertex: its wedge region
      int reg = -1;
      for (int t = 0; t < nt && reg < 0; ++t)
        for (int c = 0; c < 3 && reg < 0; ++c)
          if (T.vertex_at({t, c}) == v)
            reg = flank(t, L.fan_start[t][c] - 1);
      if (reg < 0) throw std::logic_error("vertex without a corner");
      untouched_region.push_back(reg);
      continue;
    }
    sector_of_gap[v].resize(cyc.size());
    for (size_t i = 0; i < cyc.size(); ++i) {
      sector_of_gap[v][i] = static_cast<int>(sectors.size());
      // ccw side of a corner germ is the gap just below its cycle position
      sectors.push_back(
          {v, static_cast<int>(i), flank(cyc[i].at.tri, germ_pos(cyc[i]) - 1)});
    }
  }

  // --- boundary circuits: arc sides chained through sectors ---
  // Germ of arc a at end eps: locate it in its vertex cycle.
  std::vector<std::array<std::pair<int, int>, 2>> germ_at(
      L.arcs.size());  // (vertex, cyclic index) per end
  {
    std::vector<std::array<char, 2>> found(L.arcs.size(), {0, 0});
    for (int v = 0; v < T.nvertices; ++v)
      for (size_t i = 0; i < cycles[v].size(); ++i) {
        const FanGerm& g = cycles[v][i].germ;
        if (found[g.arc][g.end])
          throw std::logic_error("duplicate germ in vertex cycles");
        found[g.arc][g.end] = 1;
        germ_at[g.arc][g.end] = {v, static_cast<int>(i)};
      }
    for (size_t a = 0; a < L.arcs.size(); ++a)
      if (!found[a][0] || !found[a][1])
        throw std::logic_error("arc end missing from vertex cycles");
  }
  // 2-regular multigraph on sectors; its components are the boundary circles
  UnionFind bnd(static_cast<int>(sectors.size()));
  std::vector<int> sector_degree(sectors.size(), 0);
  auto gap_after = [&](std::pair<int, int> germ, int shift) {
    int v = germ.first;
    int n = static_cast<int>(cycles[v].size());
    return sector_of_gap[v][((germ.second + shift) % n + n) % n];
  };
  for (size_t a = 0; a < L.arcs.size(); ++a) {
    // left side runs from the gap after end 0 to the gap before end 1,
    // right side from the gap before end 0 to the gap after end 1
    int l0 = gap_after(germ_at[a][0], 0), l1 = gap_after(germ_at[a][1], -1);
    int r0 = gap_after(germ_at[a][0], -1), r1 = gap_after(germ_at[a][1], 0);
    for (auto [x, y] : {std::pair<int, int>{l0, l1}, {r0, r1}}) {
      if (uf.find(sectors[x].region) != uf.find(sectors[y].region))
        throw std::logic_error("boundary circuit crosses components");
      bnd.unite(x, y);
      sector_degree[x]++;
      sector_degree[y]++;
    }
  }
  for (int d : sector_degree)
    if (d != 2) throw std::logic_error("sector not flanked by two arc sides");

  // --- per-component counts ---
  std::map<int, SurfaceInvariants> comp;  // root -> invariants (g last)
  std::map<int, long long> chi_top;
  for (int r = 0; r < nregions; ++r) chi_top[uf.find(r)] += 1;  // faces
  for (int e = 0; e < T.num_edges(); ++e) {
    Slot s0 = T.slots_of(e)[0];
    const int m = static_cast<int>(L.edge_events[e].size());
    for (int k = 0; k <= m; ++k)
      chi_top[uf.find(flank(s0.tri, L.side_start[s0.tri][s0.side] + k - 1))] -= 1;
  }
  for (int c = 0; c < nchords; ++c) {  // two boundary copies per chord
    const auto& ch = L.chords[c];
    chi_top[uf.find(flank(ch.tri, ch.pos_entry - 1))] -= 1;
    chi_top[uf.find(flank(ch.tri, ch.pos_entry))] -= 1;
  }
  for (int e = 0; e < T.num_edges(); ++e) {  // two copies per crossing point
    Slot s0 = T.slots_of(e)[0];
    const int m = static_cast<int>(L.edge_events[e].size());
    for (int k = 0; k < m; ++k) {
      int p = L.side_start[s0.tri][s0.side] + k;
      chi_top[uf.find(flank(s0.tri, p - 1))] += 1;
      chi_top[uf.find(flank(s0.tri, p))] += 1;
    }
  }
  for (const auto& s : sectors) {
    int root = uf.find(s.region);
    chi_top[root] += 1;
    comp[root].v += 1;
  }
  for (int r : untouched_region) {
    int root = uf.find(r);
    chi_top[root] += 1;
    comp[root].p += 1;
  }
  // boundary circles: one per multigraph component, attributed via any sector
  {
    std::vector<char> counted(sectors.size(), 0);
    for (size_t i = 0; i < sectors.size(); ++i) {
      int c = bnd.find(static_cast<int>(i));
      if (counted[c]) continue;
      counted[c] = 1;
      comp[uf.find(sectors[i].region)].b += 1;
    }
  }

  CutResult out;
  out.along = b;
  for (auto& [root, inv] : comp) {
    long long chi2 = 2 - chi_top[root] - inv.b;  // 2g
    if (chi2 < 0 || chi2 % 2 != 0)
      throw std::logic_error("component genus is not a non-negative integer");
    inv.g = chi2 / 2;
    out.boundary_marked_total += inv.v;
    out.components.push_back(inv);
  }
  for (auto& kv : chi_top)
    if (!comp.count(kv.first))
      throw std::logic_error("component without marked points");
  std::sort(out.components.begin(), out.components.end());
  return out;
}

bool complement_is_connected(const IdealTriangulation& T, const ArcSystem& j) {
  return cut_along(T, j).components.size() == 1;
}

}  // namespace arcforge
