#include "arcforge/surface.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace arcforge {

void IdealTriangulation::finalize() {
  // Derive the edge list from glue_table unless one was declared explicitly,
  // then rebuild the slot->edge index from it.
  if (edges.empty()) {
    for (int t = 0; t < ntri; ++t)
      for (int s = 0; s < 3; ++s) {
        Slot a{t, s};
        Slot b = glue_table[t][s];
        if (b < a) continue;  // partner already emitted the edge
        edges.push_back({a, b});
      }
  }
  edge_index_.assign(ntri, {-1, -1, -1});
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    for (const Slot& s : edges[e]) {
      if (s.tri < 0 || s.tri >= ntri || s.side < 0 || s.side > 2)
        throw std::invalid_argument("triangulation: edge slot out of range");
      edge_index_[s.tri][s.side] = e;
    }
  for (int t = 0; t < ntri; ++t)
    for (int s = 0; s < 3; ++s)
      if (edge_index_[t][s] < 0)
        throw std::invalid_argument("triangulation: slot missing from edge list");
}

SurfaceInvariants IdealTriangulation::invariants() const {
  long long V = nvertices;
  long long E = static_cast<long long>(edges.size());
  long long F = ntri;
  long long chi_top = V - E + F;  // closed oriented: 2 - 2g
  SurfaceInvariants inv;
  inv.g = (2 - chi_top) / 2;
  inv.b = 0;
  inv.p = nvertices;
  inv.v = 0;
  return inv;
}

void IdealTriangulation::validate() const {
  if (ntri <= 0) throw std::invalid_argument("triangulation: no triangles");
  if (static_cast<int>(glue_table.size()) != ntri ||
      static_cast<int>(vertex_table.size()) != ntri)
    throw std::invalid_argument("triangulation: table sizes disagree with ntri");
  if (edge_index_.empty())
    throw std::invalid_argument("triangulation: finalize() not called");
  for (int t = 0; t < ntri; ++t) {
    for (int s = 0; s < 3; ++s) {
      Slot g = glue_table[t][s];
      if (g.tri < 0 || g.tri >= ntri || g.side < 0 || g.side > 2)
        throw std::invalid_argument("triangulation: glue target out of range");
      if (g == Slot{t, s})
        throw std::invalid_argument("triangulation: slot glued to itself");
      Slot back = glue_table[g.tri][g.side];
      if (back != Slot{t, s})
        throw std::invalid_argument("triangulation: gluing is not an involution");
      if (edge_of(Slot{t, s}) != edge_of(g))
        throw std::invalid_argument("triangulation: edge list disagrees with gluing");
    }
    // distinct edge ids per triangle keep side serialization unambiguous
    if (edge_index_[t][0] == edge_index_[t][1] ||
        edge_index_[t][0] == edge_index_[t][2] ||
        edge_index_[t][1] == edge_index_[t][2])
      throw std::invalid_argument("triangulation: triangle with a repeated edge");
  }
  if (2 * static_cast<int>(edges.size()) != 3 * ntri)
    throw std::invalid_argument("triangulation: edge count inconsistent");

  // corner orbits under the gluing corner rule must match vertex_table
  std::vector<int> rep(3 * ntri);
  std::iota(rep.begin(), rep.end(), 0);
  auto find = [&](int x) {
    while (rep[x] != x) x = rep[x] = rep[rep[x]];
    return x;
  };
  auto unite = [&](int a, int b) { rep[find(a)] = find(b); };
  auto cid = [&](Corner c) { return 3 * c.tri + c.corner; };
  for (int t = 0; t < ntri; ++t)
    for (int s = 0; s < 3; ++s) {
      Slot g = glue_table[t][s];
      unite(cid({t, mod3(s + 1)}), cid({g.tri, mod3(g.side + 2)}));
      unite(cid({t, mod3(s + 2)}), cid({g.tri, mod3(g.side + 1)}));
    }
  std::map<int, int> orbit_vertex;
  for (int t = 0; t < ntri; ++t)
    for (int c = 0; c < 3; ++c) {
      int v = vertex_table[t][c];
      if (v < 0 || v >= nvertices)
        throw std::invalid_argument("triangulation: vertex id out of range");
      int r = find(cid({t, c}));
      auto it = orbit_vertex.find(r);
      if (it == orbit_vertex.end())
        orbit_vertex.emplace(r, v);
      else if (it->second != v)
        throw std::invalid_argument("triangulation: vertex table splits a corner orbit");
    }
  if (static_cast<int>(orbit_vertex.size()) != nvertices)
    throw std::invalid_argument("triangulation: vertex count disagrees with corner orbits");
  std::map<int, int> seen;  // vertex id -> sole orbit
  for (auto& [r, v] : orbit_vertex) {
    if (!seen.emplace(v, r).second)
      throw std::invalid_argument("triangulation: two corner orbits share a vertex id");
  }

  // The corner-matching convention in glue() bakes orientation-consistency
  // into the representation, so a non-orientable table (a Klein bottle, say)
  // cannot pass the checks above with a consistent ccw reading; an odd or
  // positive chi_top is the residual symptom visible here.
  long long chi_top = nvertices - static_cast<long long>(edges.size()) + ntri;
  if (chi_top % 2 != 0)
    throw std::invalid_argument("triangulation: not a closed oriented surface");
  if (invariants().g < 0)
    throw std::invalid_argument("triangulation: negative genus");
}

namespace {

IdealTriangulation make_torus_1() {
  IdealTriangulation T;
  T.name = "torus-1-marked";
  T.ntri = 2;
  T.nvertices = 1;
  T.glue_table.resize(2);
  T.vertex_table.assign(2, {0, 0, 0});
  auto g = [&](Slot a, Slot b) {
    T.glue_table[a.tri][a.side] = b;
    T.glue_table[b.tri][b.side] = a;
  };
  g({0, 2}, {1, 0});
  g({0, 0}, {1, 1});
  g({0, 1}, {1, 2});
  // scan order: edge 0 = (0,0)~(1,1), edge 1 = (0,1)~(1,2), edge 2 = (0,2)~(1,0)
  T.finalize();
  T.validate();
  return T;
}

IdealTriangulation make_torus_2() {
  // Unit square with x at the identified corners and y at the center, four
  // spokes.  T0 bottom, T1 right, T2 top, T3 left; corner 2 of each is y.
  IdealTriangulation T;
  T.name = "torus-2-marked";
  T.ntri = 4;
  T.nvertices = 2;
  T.glue_table.resize(4);
  T.vertex_table.assign(4, {0, 0, 1});
  auto g = [&](Slot a, Slot b) {
    T.glue_table[a.tri][a.side] = b;
    T.glue_table[b.tri][b.side] = a;
  };
  g({0, 2}, {2, 2});  // horizontal square side
  g({1, 2}, {3, 2});  // vertical square side
  g({0, 1}, {3, 0});  // bottom-left spoke
  g({0, 0}, {1, 1});  // bottom-right spoke
  g({1, 0}, {2, 1});  // top-right spoke
  g({2, 0}, {3, 1});  // top-left spoke
  T.finalize();
  T.validate();
  return T;
}

}  // namespace

const IdealTriangulation& standard_fixture(const std::string& name) {
  static const IdealTriangulation t1 = make_torus_1();
  static const IdealTriangulation t2 = make_torus_2();
  if (name == "torus-1-marked") return t1;
  if (name == "torus-2-marked") return t2;
  throw std::invalid_argument("unknown surface: " + name);
}

std::vector<std::string> standard_fixture_names() {
  return {"torus-1-marked", "torus-2-marked"};
}

}  // namespace arcforge
