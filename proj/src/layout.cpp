#include "arcforge/layout.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace arcforge {

namespace {

constexpr long long KINF = std::numeric_limits<long long>::max();

// Ray of an arc leaving an edge crossing into one adjacent triangle, walked
// as a stream of local ranks.  Entering a triangle through side s, the local
// coordinate on s runs from corner s+1 to corner s+2; a continuation exiting
// side s+2 hugs corner s+1 (rank 0), ending at corner s sits in the middle
// (rank 1), exiting side s+1 hugs corner s+2 (rank 2).
struct Ray {
  const ArcClass* a;
  const ArcWalk* w;
  int j;      // step index of the crossing the ray starts from
  bool fwd;   // direction along the arc
  Slot cur;   // entry slot of the triangle the ray is currently in
  bool done = false;

  int next_rank() {
    if (done) throw std::logic_error("ray walked past its end");
    int m;
    if (fwd) {
      if (j + 1 == static_cast<int>(w->steps.size())) {
        done = true;
        return 1;
      }
      m = a->moves[j];
      ++j;
    } else {
      if (j == 0) {
        done = true;
        return 1;
      }
      m = 3 - a->moves[j - 1];
      --j;
    }
    cur = {cur.tri, mod3(cur.side + m)};
    // step through the gluing into the next triangle
    return m == 2 ? 0 : 2;
  }

  void advance(const IdealTriangulation& T) { cur = T.glue(cur); }
};

Ray ray_into(const IdealTriangulation& T, const ArcClass& a, const ArcWalk& w,
             int idx, Slot target) {
  (void)T;
  Ray r{&a, &w, idx, true, target};
  if (w.steps[idx].in == target) {
    r.fwd = true;
  } else if (w.steps[idx].out == target) {
    r.fwd = false;
  } else {
    throw std::logic_error("ray target slot does not bound the crossing");
  }
  return r;
}

struct SideVerdict {
  int order = 0;       // -1: A first in this slot's coordinate, +1: B first
  long long depth = KINF;  // KINF: rays coincide to their common end
};

}  // namespace

namespace detail {

// Compare two crossings of the same edge by following both arcs into the
// triangle behind `slot`, in lockstep, until the first divergence.
SideVerdict side_compare(const IdealTriangulation& T,
                         const std::vector<ArcClass>& arcs,
                         const std::vector<ArcWalk>& walks, Layout::Event A,
                         Layout::Event B, Slot slot) {
  Ray ra = ray_into(T, arcs[A.arc], walks[A.arc], A.idx, slot);
  Ray rb = ray_into(T, arcs[B.arc], walks[B.arc], B.idx, slot);
  for (long long depth = 1;; ++depth) {
    int ka = ra.next_rank();
    int kb = rb.next_rank();
    if (ra.done && rb.done) return {0, KINF};
    if (ka != kb) return {ka < kb ? -1 : +1, depth};
    // identical continuations step through the same gluing
    ra.advance(T);
    rb.advance(T);
    if (ra.cur != rb.cur) throw std::logic_error("lockstep rays split slots");
  }
}

// Strict order along the edge, in the reference slot's local coordinate.
// The nearer divergence decides; a tie in depth falls to the reference side;
// rays coinciding on one side (shared endpoint at infinity) defer to the
// other side.
bool event_before(const IdealTriangulation& T, const std::vector<ArcClass>& arcs,
                  const std::vector<ArcWalk>& walks, int edge, Layout::Event A,
                  Layout::Event B) {
  const auto& slots = T.slots_of(edge);
  SideVerdict v0 = side_compare(T, arcs, walks, A, B, slots[0]);
  SideVerdict v1 = side_compare(T, arcs, walks, A, B, slots[1]);
  if (v0.depth == KINF && v1.depth == KINF)
    throw std::logic_error("distinct crossings with identical rays");
  // the two slot coordinates of an edge run in opposite directions
  int order = v0.depth <= v1.depth ? v0.order : -v1.order;
  if (order == 0) throw std::logic_error("order verdict from a tied side");
  return order < 0;
}

}  // namespace detail

namespace {

bool interleaved(int a1, int a2, int b1, int b2) {
  if (a1 > a2) std::swap(a1, a2);
  bool in1 = a1 < b1 && b1 < a2;
  bool in2 = a1 < b2 && b2 < a2;
  return in1 != in2;
}

}  // namespace

long long Layout::pair_count(int i, int j) const {
  long long n = 0;
  for (const auto& x : crossings) {
    int u = chords[x.chord_lo].arc, v = chords[x.chord_hi].arc;
    if ((u == i && v == j) || (u == j && v == i)) ++n;
  }
  return n;
}

Layout make_layout(const IdealTriangulation& T, std::vector<ArcClass> arcs) {
  Layout L;
  L.T = &T;
  L.arcs = std::move(arcs);
  const int n = static_cast<int>(L.arcs.size());
  L.walks.reserve(n);
  for (const auto& a : L.arcs) L.walks.push_back(walk(T, a));

  // ---- per-edge crossing orders ----
  L.edge_events.assign(T.num_edges(), {});
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < static_cast<int>(L.walks[i].steps.size()); ++k) {
      int e = T.edge_of(L.walks[i].steps[k].out);
      auto& lst = L.edge_events[e];
      Layout::Event ev{i, k};
      // insertion sort against the pairwise order
      size_t pos = lst.size();
      while (pos > 0 &&
             detail::event_before(T, L.arcs, L.walks, e, ev, lst[pos - 1]))
        --pos;
      lst.insert(lst.begin() + pos, ev);
    }
  // the pairwise order must be a total order on every edge
  for (int e = 0; e < T.num_edges(); ++e) {
    const auto& lst = L.edge_events[e];
    for (size_t i = 0; i < lst.size(); ++i)
      for (size_t j = i + 1; j < lst.size(); ++j) {
        if (!detail::event_before(T, L.arcs, L.walks, e, lst[i], lst[j]))
          throw std::logic_error("edge order is not consistent");
      }
  }

  // ---- slot views and event local indices ----
  L.side_events.assign(T.ntri, {});
  std::vector<std::vector<int>> ref_pos(n);  // per event: index in edge order
  for (int i = 0; i < n; ++i) ref_pos[i].assign(L.walks[i].steps.size(), -1);
  for (int e = 0; e < T.num_edges(); ++e) {
    const auto& lst = L.edge_events[e];
    for (size_t k = 0; k < lst.size(); ++k) ref_pos[lst[k].arc][lst[k].idx] = (int)k;
    Slot s0 = T.slots_of(e)[0], s1 = T.slots_of(e)[1];
    L.side_events[s0.tri][s0.side] = lst;
    auto rev = lst;
    std::reverse(rev.begin(), rev.end());
    L.side_events[s1.tri][s1.side] = rev;
  }
  auto local_index = [&](int arc, int idx, Slot slot) {
    int e = T.edge_of(slot);
    int m = static_cast<int>(L.edge_events[e].size());
    int r = ref_pos[arc][idx];
    return slot == T.slots_of(e)[0] ? r : m - 1 - r;
  };

  // ---- corner fans ----
  // Ends arriving through side c fan out at corner c in reverse of their
  // side-c coordinate; an edge-class chord hugging side c+1 pins to the fan
  // start, one hugging side c+2 pins to the fan end.
  L.fans.assign(T.ntri, {});
  struct PendingGerm {
    int key;
    FanGerm g;
  };
  std::vector<std::array<std::vector<PendingGerm>, 3>> mid(T.ntri);
  for (int i = 0; i < n; ++i) {
    if (L.arcs[i].edge_arc) continue;
    const auto& w = L.walks[i];
    Slot s_out = w.steps.front().out;
    mid[s_out.tri][s_out.side].push_back(
        {local_index(i, 0, s_out), FanGerm{i, 0}});
    Slot s_in = w.steps.back().in;
    mid[s_in.tri][s_in.side].push_back(
        {local_index(i, (int)w.steps.size() - 1, s_in), FanGerm{i, 1}});
  }
  for (int t = 0; t < T.ntri; ++t)
    for (int c = 0; c < 3; ++c) {
      auto& fan = L.fans[t][c];
      // fan start: edge class realized in this triangle on side c+1
      for (int i = 0; i < n; ++i)
        if (L.arcs[i].edge_arc &&
            T.slots_of(L.arcs[i].edge)[0] == Slot{t, mod3(c + 1)})
          fan.push_back({i, 1});  // its corner ref_side+2 end
      auto germs = mid[t][c];
      std::sort(germs.begin(), germs.end(), [](const auto& a, const auto& b) {
        return a.key > b.key;  // reversed side coordinate
      });
      for (const auto& g : germs) fan.push_back(g.g);
      for (int i = 0; i < n; ++i)
        if (L.arcs[i].edge_arc &&
            T.slots_of(L.arcs[i].edge)[0] == Slot{t, mod3(c + 2)})
          fan.push_back({i, 0});  // its corner ref_side+1 end
    }

  // ---- expanded boundary cycles ----
  // ccw around a triangle: corner 0, side 2, corner 1, side 0, corner 2,
  // side 1; side s ports ascend the local coordinate, fans ascend fan order.
  L.fan_start.assign(T.ntri, {});
  L.side_start.assign(T.ntri, {});
  L.cycle_size.assign(T.ntri, 0);
  for (int t = 0; t < T.ntri; ++t) {
    int pos = 0;
    for (int c = 0; c < 3; ++c) {
      L.fan_start[t][c] = pos;
      pos += static_cast<int>(L.fans[t][c].size());
      int s = mod3(c + 2);  // side between corner c and corner c+1
      L.side_start[t][s] = pos;
      pos += static_cast<int>(L.side_events[t][s].size());
    }
    L.cycle_size[t] = pos;
  }

  // ---- chords ----
  L.arc_chord_begin.assign(n, 0);
  auto fan_index_of = [&](int t, int c, FanGerm g) {
    const auto& fan = L.fans[t][c];
    for (size_t k = 0; k < fan.size(); ++k)
      if (fan[k].arc == g.arc && fan[k].end == g.end) return (int)k;
    throw std::logic_error("germ missing from fan");
  };
  auto corner_port = [&](Corner c, FanGerm g) {
    PortRef p;
    p.side_port = false;
    p.corner = c;
    p.index = fan_index_of(c.tri, c.corner, g);
    return std::pair<PortRef, int>{p, L.fan_start[c.tri][c.corner] + p.index};
  };
  auto side_port = [&](int arc, int idx, Slot slot) {
    PortRef p;
    p.side_port = true;
    p.slot = slot;
    p.index = local_index(arc, idx, slot);
    return std::pair<PortRef, int>{p, L.side_start[slot.tri][slot.side] + p.index};
  };
  for (int i = 0; i < n; ++i) {
    L.arc_chord_begin[i] = static_cast<int>(L.chords.size());
    if (L.arcs[i].edge_arc) {
      Slot ref = T.slots_of(L.arcs[i].edge)[0];
      LayoutChord ch;
      ch.arc = i;
      ch.leg = 0;
      ch.tri = ref.tri;
      auto [pe, ze] = corner_port({ref.tri, mod3(ref.side + 1)}, {i, 0});
      auto [px, zx] = corner_port({ref.tri, mod3(ref.side + 2)}, {i, 1});
      ch.entry = pe;
      ch.pos_entry = ze;
      ch.exit = px;
      ch.pos_exit = zx;
      L.chords.push_back(ch);
      continue;
    }
    const auto& w = L.walks[i];
    int m = static_cast<int>(w.steps.size());
    for (int leg = 0; leg <= m; ++leg) {
      LayoutChord ch;
      ch.arc = i;
      ch.leg = leg;
      if (leg == 0) {
        Slot s = w.steps[0].out;
        ch.tri = s.tri;
        auto [pe, ze] = corner_port({s.tri, s.side}, {i, 0});
        auto [px, zx] = side_port(i, 0, s);
        ch.entry = pe;
        ch.pos_entry = ze;
        ch.exit = px;
        ch.pos_exit = zx;
      } else if (leg == m) {
        Slot s = w.steps[m - 1].in;
        ch.tri = s.tri;
        auto [pe, ze] = side_port(i, m - 1, s);
        auto [px, zx] = corner_port({s.tri, s.side}, {i, 1});
        ch.entry = pe;
        ch.pos_entry = ze;
        ch.exit = px;
        ch.pos_exit = zx;
      } else {
        Slot sin = w.steps[leg - 1].in;
        Slot sout = w.steps[leg].out;
        if (sin.tri != sout.tri) throw std::logic_error("leg spans two triangles");
        ch.tri = sin.tri;
        auto [pe, ze] = side_port(i, leg - 1, sin);
        auto [px, zx] = side_port(i, leg, sout);
        ch.entry = pe;
        ch.pos_entry = ze;
        ch.exit = px;
        ch.pos_exit = zx;
      }
      L.chords.push_back(ch);
    }
  }

  // ---- crossings: interleaved chord pairs within a triangle ----
  std::vector<std::vector<int>> tri_chords(T.ntri);
  for (int c = 0; c < static_cast<int>(L.chords.size()); ++c)
    tri_chords[L.chords[c].tri].push_back(c);
  L.chord_crossings.assign(L.chords.size(), {});
  for (int t = 0; t < T.ntri; ++t) {
    const auto& ids = tri_chords[t];
    for (size_t a = 0; a < ids.size(); ++a)
      for (size_t b = a + 1; b < ids.size(); ++b) {
        const auto& ca = L.chords[ids[a]];
        const auto& cb = L.chords[ids[b]];
        if (interleaved(ca.pos_entry, ca.pos_exit, cb.pos_entry, cb.pos_exit)) {
          int id = static_cast<int>(L.crossings.size());
          L.crossings.push_back({t, (int)ids[a], (int)ids[b]});
          L.chord_crossings[ids[a]].push_back(id);
          L.chord_crossings[ids[b]].push_back(id);
        }
      }
  }

  // ---- order crossings along each chord ----
  // Canonical planar realization per triangle: cut the boundary cycle before
  // position 0 and draw each chord as an arch over the baseline.  When a
  // chord closes (its larger port) it dives past every arch still open under
  // it -- exactly its interleaving partners that close later.  Sweep position
  // of the crossing of c with o is therefore min(close_c, close_o); ties are
  // the dive of c itself, crossed in partner opening order.  Orders chosen
  // this way always assemble into one planar diagram; independent per-chord
  // choices need not.
  for (int c = 0; c < static_cast<int>(L.chords.size()); ++c) {
    auto& lst = L.chord_crossings[c];
    const auto& ch = L.chords[c];
    int close_c = std::max(ch.pos_entry, ch.pos_exit);
    auto key = [&](int xid) {
      const auto& x = L.crossings[xid];
      int other = x.chord_lo == c ? x.chord_hi : x.chord_lo;
      int open_o = std::min(L.chords[other].pos_entry, L.chords[other].pos_exit);
      int close_o = std::max(L.chords[other].pos_entry, L.chords[other].pos_exit);
      return std::pair<int, int>{std::min(close_c, close_o), open_o};
    };
    std::sort(lst.begin(), lst.end(),
              [&](int x, int y) { return key(x) < key(y); });
    // the sweep orders along the strand from its smaller port; the arc may
    // traverse the chord the other way
    if (ch.pos_entry > ch.pos_exit) std::reverse(lst.begin(), lst.end());
  }

  // ---- crossings along each arc ----
  L.arc_crossings.assign(n, {});
  for (int i = 0; i < n; ++i) {
    int legs = L.arcs[i].edge_arc ? 1 : L.arcs[i].crossings() + 1;
    for (int leg = 0; leg < legs; ++leg) {
      int c = L.chord_of(i, leg);
      for (int xid : L.chord_crossings[c]) L.arc_crossings[i].push_back(xid);
    }
  }
  return L;
}

std::vector<std::vector<VertexGerm>> vertex_germ_cycles(const Layout& L) {
  const IdealTriangulation& T = *L.T;
  std::vector<std::vector<VertexGerm>> out(T.nvertices);
  std::vector<char> seen(3 * T.ntri, 0);
  for (int t = 0; t < T.ntri; ++t)
    for (int c = 0; c < 3; ++c) {
      if (seen[3 * t + c]) continue;
      int v = T.vertex_at({t, c});
      auto& cyc = out[v];
      if (!cyc.empty()) throw std::logic_error("vertex wedge orbit revisited");
      Corner w{t, c};
      do {
        if (seen[3 * w.tri + w.corner])
          throw std::logic_error("wedge cycle is not a single orbit");
        seen[3 * w.tri + w.corner] = 1;
        const auto& fan = L.fans[w.tri][w.corner];
        for (int k = static_cast<int>(fan.size()) - 1; k >= 0; --k)
          cyc.push_back({w, k, fan[k]});
        w = T.next_wedge_ccw(w);
      } while (!(w.tri == t && w.corner == c));
    }
  return out;
}

long long geometric_intersection(const IdealTriangulation& T, const ArcClass& a,
                                 const ArcClass& b) {
  // i(a,a) = 0 at class level; endpoint meetings are never counted
  if (canonical(T, a) == canonical(T, b)) return 0;
  Layout L = make_layout(T, {a, b});
  return L.pair_count(0, 1);
}

long long self_intersection(const IdealTriangulation& T, const ArcClass& a) {
  Layout L = make_layout(T, {a});
  return L.pair_count(0, 0);
}

}  // namespace arcforge
