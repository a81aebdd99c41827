#include "arcforge/classify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "arcforge/arc.hpp"
#include "arcforge/layout.hpp"
#include "arcforge/parallel.hpp"

namespace arcforge {

namespace {

constexpr size_t kOrbitCap = 512;

std::vector<int> slot_index(const RibbonGraph& g) {
  std::vector<int> slot(g.hvertex.size(), -1);
  for (const auto& r : g.rot)
    for (size_t i = 0; i < r.size(); ++i) slot[r[i]] = static_cast<int>(i);
  return slot;
}

// Rooted traversal encoding.  For a fixed graph shape every stream has the
// same length, so the comparison against the incumbent can abort at the
// first larger token.  Fills `best` when empty; replaces it when strictly
// smaller; returns whether it replaced.
bool encode_min(const std::vector<std::vector<int>>& rot,
                const std::vector<int>& mate, const std::vector<int>& hvertex,
                const std::vector<int>& slot, const std::vector<int>& types,
                int root, int sense, std::vector<int>& best) {
  const int V = static_cast<int>(rot.size());
  bool better = best.empty();
  std::vector<int> toks;
  toks.reserve(best.empty() ? hvertex.size() * 2 : best.size());
  size_t pos = 0;
  auto emit = [&](int t) {
    if (!better) {
      if (pos >= best.size() || t > best[pos]) return false;
      if (t < best[pos]) better = true;
    }
    toks.push_back(t);
    ++pos;
    return true;
  };
  std::vector<int> id(V, -1), entry(V, -1), order;
  order.reserve(V);
  id[hvertex[root]] = 0;
  entry[hvertex[root]] = root;
  order.push_back(hvertex[root]);
  for (size_t qi = 0; qi < order.size(); ++qi) {
    const int v = order[qi];
    const auto& r = rot[v];
    const int d = static_cast<int>(r.size());
    if (!emit(types[v]) || !emit(d)) return false;
    const int base = slot[entry[v]];
    for (int k = 0; k < d; ++k) {
      const int h = r[((base + sense * k) % d + d) % d];
      const int m = mate[h];
      const int u = hvertex[m];
      if (id[u] < 0) {
        id[u] = static_cast<int>(order.size());
        entry[u] = m;
        order.push_back(u);
        if (!emit(-1)) return false;
      } else {
        const int du = static_cast<int>(rot[u].size());
        const int off = (((slot[m] - slot[entry[u]]) * sense) % du + du) % du;
        if (!emit(id[u]) || !emit(off)) return false;
      }
    }
  }
  if (static_cast<int>(order.size()) != V)
    throw std::runtime_error("ribbon graph is not connected");
  if (!better) return false;
  best = std::move(toks);
  return true;
}

std::vector<std::vector<int>> face_orbits(
    const std::vector<std::vector<int>>& rot, const std::vector<int>& mate,
    const std::vector<int>& hvertex, const std::vector<int>& slot) {
  std::vector<char> seen(mate.size(), 0);
  std::vector<std::vector<int>> faces;
  for (size_t h0 = 0; h0 < mate.size(); ++h0) {
    if (seen[h0]) continue;
    std::vector<int> cyc;
    int h = static_cast<int>(h0);
    while (!seen[h]) {
      seen[h] = 1;
      cyc.push_back(h);
      const int m = mate[h];
      const auto& r = rot[hvertex[m]];
      h = r[(slot[m] + 1) % r.size()];
    }
    faces.push_back(std::move(cyc));
  }
  return faces;
}

// Slide a strand across the opposite crossing of a triangular face whose
// three corners are distinct crossings: along each of the three strands the
// two corner crossings swap places.  An isotopy of the system, so codes are
// minimized over the orbit this move generates.  Returns false for faces
// where the rewiring would be ambiguous.
bool slide_face(const std::vector<std::vector<int>>& rot,
                const std::vector<int>& hvertex, const std::vector<int>& slot,
                int nmarked, const std::vector<int>& face,
                const std::vector<int>& mate, std::vector<int>* out) {
  std::array<int, 3> vs{};
  for (int i = 0; i < 3; ++i) {
    const int v = hvertex[face[i]];
    if (v < nmarked || rot[v].size() != 4) return false;
    vs[i] = v;
  }
  if (vs[0] == vs[1] || vs[0] == vs[2] || vs[1] == vs[2]) return false;
  std::vector<std::pair<int, int>> pairs;
  std::set<int> touched;
  for (int i = 0; i < 3; ++i) {
    const int hu = face[i];
    const int hv = mate[hu];
    const int hu2 = rot[hvertex[hu]][(slot[hu] + 2) % 4];
    const int hv2 = rot[hvertex[hv]][(slot[hv] + 2) % 4];
    const int po = mate[hu2];
    const int qo = mate[hv2];
    pairs.emplace_back(po, hv);
    pairs.emplace_back(hv2, hu2);
    pairs.emplace_back(hu, qo);
    for (int x : {hu, hv, hu2, hv2, po, qo})
      if (!touched.insert(x).second) return false;
  }
  *out = mate;
  for (const auto& [a, b] : pairs) {
    (*out)[a] = b;
    (*out)[b] = a;
  }
  return true;
}

// All mate tables reachable by triangle slides (vertices and rotations are
// shared, only the pairing changes).
std::vector<std::vector<int>> slide_orbit(const RibbonGraph& g,
                                          const std::vector<int>& slot) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> out;
  seen.insert(g.mate);
  out.push_back(g.mate);
  for (size_t qi = 0; qi < out.size(); ++qi) {
    const std::vector<int> cur = out[qi];
    for (const auto& face : face_orbits(g.rot, cur, g.hvertex, slot)) {
      if (face.size() != 3) continue;
      std::vector<int> next;
      if (!slide_face(g.rot, g.hvertex, slot, g.nmarked, face, cur, &next))
        continue;
      if (seen.insert(next).second) {
        if (out.size() >= kOrbitCap)
          throw std::runtime_error("triangle-slide orbit exceeded cap");
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

std::vector<int> min_tokens(const RibbonGraph& g,
                            const std::vector<std::vector<int>>& orbit,
                            const std::vector<int>& slot,
                            const std::vector<int>& types,
                            std::initializer_list<int> senses) {
  std::vector<int> best;
  for (const auto& mate : orbit)
    for (int sense : senses)
      for (size_t root = 0; root < g.hvertex.size(); ++root)
        encode_min(g.rot, mate, g.hvertex, slot, types,
                   static_cast<int>(root), sense, best);
  return best;
}

std::vector<int> base_types(const RibbonGraph& g) {
  std::vector<int> types(g.nvertices(), 1);
  for (int v = 0; v < g.nmarked; ++v) types[v] = 0;
  return types;
}

std::string hex_code(const std::vector<int>& toks) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(toks.size() * 2);
  for (int t : toks) {
    if (t < -1 || t > 254) throw std::runtime_error("code token out of range");
    const int b = (t == -1) ? 255 : t;
    s.push_back(digits[(b >> 4) & 15]);
    s.push_back(digits[b & 15]);
  }
  return s;
}

}  // namespace

int RibbonGraph::nfaces() const {
  if (hvertex.empty()) return 0;
  const auto slot = slot_index(*this);
  return static_cast<int>(face_orbits(rot, mate, hvertex, slot).size());
}

RibbonGraph system_to_ribbon_graph(const IdealTriangulation& T,
                                   const ArcSystem& s) {
  if (s.surface != T.name)
    throw std::invalid_argument("system recorded for surface '" + s.surface +
                                "' does not match fixture '" + T.name + "'");
  const Layout L = make_layout(T, s.members);
  const auto cycles = vertex_germ_cycles(L);

  RibbonGraph rg;
  std::vector<int> vid(T.nvertices, -1);
  for (int v = 0; v < T.nvertices; ++v)
    if (!cycles[v].empty()) {
      vid[v] = static_cast<int>(rg.rot.size());
      rg.rot.emplace_back();
    }
  rg.nmarked = static_cast<int>(rg.rot.size());
  rg.rot.resize(rg.nmarked + L.crossings.size());

  auto new_half = [&](int v) {
    const int h = static_cast<int>(rg.hvertex.size());
    rg.hvertex.push_back(v);
    rg.rot[v].push_back(h);
    return h;
  };

  std::vector<std::array<int, 2>> germ_slot(s.members.size(), {-1, -1});
  for (int v = 0; v < T.nvertices; ++v)
    for (const auto& g : cycles[v])
      germ_slot[g.germ.arc][g.germ.end] = new_half(vid[v]);

  // The four strand directions at a crossing, counterclockwise = ascending
  // boundary-cycle position of the port each one leads to.
  std::map<std::tuple<int, int, int>, int> xslot;  // (crossing, chord, to-exit)
  for (size_t x = 0; x < L.crossings.size(); ++x) {
    const auto& X = L.crossings[x];
    std::array<std::pair<int, std::pair<int, int>>, 4> ports{{
        {L.chords[X.chord_lo].pos_entry, {X.chord_lo, 0}},
        {L.chords[X.chord_lo].pos_exit, {X.chord_lo, 1}},
        {L.chords[X.chord_hi].pos_entry, {X.chord_hi, 0}},
        {L.chords[X.chord_hi].pos_exit, {X.chord_hi, 1}},
    }};
    std::sort(ports.begin(), ports.end());
    for (const auto& [pos, key] : ports)
      xslot[{static_cast<int>(x), key.first, key.second}] =
          new_half(rg.nmarked + static_cast<int>(x));
  }

  rg.mate.assign(rg.hvertex.size(), -1);
  auto pair_up = [&](int a, int b) {
    rg.mate[a] = b;
    rg.mate[b] = a;
  };
  for (size_t a = 0; a < s.members.size(); ++a) {
    if (germ_slot[a][0] < 0 || germ_slot[a][1] < 0)
      throw std::logic_error("arc end missing from the vertex fans");
    int prev = germ_slot[a][0];
    for (const int x : L.arc_crossings[a]) {
      const auto& X = L.crossings[x];
      int c = -1;
      if (L.chords[X.chord_lo].arc == static_cast<int>(a)) c = X.chord_lo;
      if (L.chords[X.chord_hi].arc == static_cast<int>(a)) {
        if (c >= 0) throw std::logic_error("self-crossing in a simple system");
        c = X.chord_hi;
      }
      if (c < 0) throw std::logic_error("crossing not on its own arc");
      pair_up(prev, xslot.at({x, c, 0}));
      prev = xslot.at({x, c, 1});
    }
    pair_up(prev, germ_slot[a][1]);
  }
  for (const int m : rg.mate)
    if (m < 0) throw std::logic_error("unpaired half-edge");
  return rg;
}

bool verify_filling(const RibbonGraph& rg, const IdealTriangulation& T) {
  if (rg.nvertices() == 0) return false;
  if (rg.nmarked != T.nvertices) return false;
  // connectivity over edges
  std::vector<char> seen(rg.nvertices(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const int h : rg.rot[v]) {
      const int u = rg.hvertex[rg.mate[h]];
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != rg.nvertices()) return false;
  const auto inv = T.invariants();
  const int chi_top = 2 - 2 * inv.g - inv.b;
  return rg.nvertices() - rg.nedges() + rg.nfaces() == chi_top;
}

std::string canonical_code(const RibbonGraph& rg) {
  if (rg.nvertices() == 0) return {};
  const auto slot = slot_index(rg);
  const auto orbit = slide_orbit(rg, slot);
  return hex_code(min_tokens(rg, orbit, slot, base_types(rg), {1, -1}));
}

std::vector<SystemClass> classify(const IdealTriangulation& T,
                                  const std::vector<ArcSystem>& systems,
                                  int threads) {
  const int n = static_cast<int>(systems.size());
  std::vector<std::string> codes(n);
  std::vector<char> bad(n, 0);
  parallel_for(n, threads, [&](int i) {
    const RibbonGraph rg = system_to_ribbon_graph(T, systems[i]);
    if (!verify_filling(rg, T)) {
      bad[i] = 1;
      return;
    }
    codes[i] = canonical_code(rg);
  });
  for (int i = 0; i < n; ++i)
    if (bad[i])
      throw std::runtime_error("classification aborted: system " +
                               std::to_string(i) + " is not filling");

  std::map<std::string, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[codes[i]].push_back(i);

  std::vector<SystemClass> out;
  out.reserve(groups.size());
  for (const auto& [code, idx] : groups) {
    SystemClass c;
    c.code = code;
    c.representative = systems[idx.front()];
    c.count = static_cast<int>(idx.size());
    c.size = static_cast<int>(c.representative.members.size());
    c.j_size = static_cast<int>(non_intersecting_subset(c.representative).size());
    for (size_t i = 0; i < c.representative.members.size(); ++i)
      for (size_t j = i + 1; j < c.representative.members.size(); ++j)
        c.crossings += c.representative.matrix[i][j];
    std::vector<int> loop_count(T.nvertices, 0);
    for (const auto& m : c.representative.members) {
      const auto [v0, v1] = endpoints(T, m);
      if (v0 == v1) ++loop_count[v0];
    }
    std::sort(loop_count.begin(), loop_count.end());
    c.loops = loop_count;

    const RibbonGraph rg = system_to_ribbon_graph(T, c.representative);
    const auto slot = slot_index(rg);
    const auto orbit = slide_orbit(rg, slot);
    const auto types = base_types(rg);
    c.amphichiral = min_tokens(rg, orbit, slot, types, {1}) ==
                    min_tokens(rg, orbit, slot, types, {-1});
    if (rg.nmarked == 2) {
      std::vector<int> lab = types, swp = types;
      lab[0] = 2;
      lab[1] = 3;
      swp[0] = 3;
      swp[1] = 2;
      c.swap_symmetric = min_tokens(rg, orbit, slot, lab, {1, -1}) ==
                         min_tokens(rg, orbit, slot, swp, {1, -1});
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace arcforge
