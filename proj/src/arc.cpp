#include "arcforge/arc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "arcforge/layout.hpp"

namespace arcforge {

bool arc_less(const ArcClass& a, const ArcClass& b) {
  if (a.edge_arc != b.edge_arc) return a.edge_arc;
  if (a.edge_arc) return a.edge < b.edge;
  if (a.crossings() != b.crossings()) return a.crossings() < b.crossings();
  if (a.start != b.start) return a.start < b.start;
  return a.moves < b.moves;
}

ArcWalk walk(const IdealTriangulation& T, const ArcClass& a) {
  ArcWalk w;
  if (a.edge_arc) {
    if (a.edge < 0 || a.edge >= T.num_edges())
      throw std::invalid_argument("arc: edge id out of range");
    return w;
  }
  if (a.start.tri < 0 || a.start.tri >= T.ntri || a.start.corner < 0 ||
      a.start.corner > 2)
    throw std::invalid_argument("arc: start corner out of range");
  w.start = a.start;
  Slot out{a.start.tri, a.start.corner};
  for (size_t i = 0;; ++i) {
    Slot in = T.glue(out);
    w.steps.push_back({out, in});
    if (i == a.moves.size()) {
      w.end = {in.tri, in.side};
      return w;
    }
    if (a.moves[i] != 1 && a.moves[i] != 2)
      throw std::invalid_argument("arc: move outside {1,2}");
    out = {in.tri, mod3(in.side + a.moves[i])};
  }
}

ArcClass reversed(const IdealTriangulation& T, const ArcClass& a) {
  if (a.edge_arc) return a;
  ArcWalk w = walk(T, a);
  ArcClass r;
  r.start = w.end;
  r.moves.resize(a.moves.size());
  for (size_t i = 0; i < a.moves.size(); ++i)
    r.moves[i] = static_cast<uint8_t>(3 - a.moves[a.moves.size() - 1 - i]);
  return r;
}

ArcClass canonical(const IdealTriangulation& T, const ArcClass& a) {
  if (a.edge_arc) return a;
  ArcClass r = reversed(T, a);
  return arc_less(r, a) ? r : a;
}

std::pair<int, int> endpoints(const IdealTriangulation& T, const ArcClass& a) {
  if (a.edge_arc) {
    Slot s = T.slots_of(a.edge)[0];
    return {T.vertex_at({s.tri, mod3(s.side + 1)}),
            T.vertex_at({s.tri, mod3(s.side + 2)})};
  }
  ArcWalk w = walk(T, a);
  return {T.vertex_at(w.start), T.vertex_at(w.end)};
}

ArcClass tighten(const IdealTriangulation& T, const RawPath& p) {
  Corner start = p.start;
  int end_corner = p.end_corner;
  std::vector<Slot> outs = p.outs;

  // validate the chain once
  if (start.tri < 0 || start.tri >= T.ntri || start.corner < 0 || start.corner > 2)
    throw std::invalid_argument("tighten: start corner out of range");
  if (end_corner < 0 || end_corner > 2)
    throw std::invalid_argument("tighten: end corner out of range");
  {
    int t = start.tri;
    for (const Slot& s : outs) {
      if (s.tri != t) throw std::invalid_argument("tighten: broken slot chain");
      if (s.side < 0 || s.side > 2)
        throw std::invalid_argument("tighten: slot side out of range");
      t = T.glue(s).tri;
    }
  }

  for (bool changed = true; changed;) {
    changed = false;
    // immediate backtrack: entering and leaving a triangle by one slot
    for (size_t i = 0; i + 1 < outs.size(); ++i) {
      if (outs[i + 1] == T.glue(outs[i])) {
        outs.erase(outs.begin() + i, outs.begin() + i + 2);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    // half-slide at the start: first crossing on a side of the start corner
    if (!outs.empty()) {
      int c = start.corner;
      if (outs[0].side == mod3(c + 1)) {
        Slot g = T.glue(outs[0]);
        start = {g.tri, mod3(g.side + 1)};  // corner c+3 maps across as s'+1
        outs.erase(outs.begin());
        changed = true;
        continue;
      }
      if (outs[0].side == mod3(c + 2)) {
        Slot g = T.glue(outs[0]);
        start = {g.tri, mod3(g.side + 2)};
        outs.erase(outs.begin());
        changed = true;
        continue;
      }
    }
    // half-slide at the end
    if (!outs.empty()) {
      Slot in = T.glue(outs.back());
      if (end_corner == mod3(in.side + 1)) {
        end_corner = mod3(outs.back().side + 2);
        outs.pop_back();
        changed = true;
        continue;
      }
      if (end_corner == mod3(in.side + 2)) {
        end_corner = mod3(outs.back().side + 1);
        outs.pop_back();
        changed = true;
        continue;
      }
    }
  }

  if (outs.empty()) {
    if (end_corner == start.corner)
      throw std::invalid_argument("tighten: path is inessential");
    int side = mod3(3 - start.corner - end_corner);
    ArcClass a;
    a.edge_arc = true;
    a.edge = T.edge_of({start.tri, side});
    return a;
  }

  ArcClass a;
  a.start = start;
  if (outs[0] != Slot{start.tri, start.corner})
    throw std::logic_error("tighten: first crossing not opposite the start");
  for (size_t i = 0; i + 1 < outs.size(); ++i) {
    Slot in = T.glue(outs[i]);
    int m = mod3(outs[i + 1].side - in.side);
    if (m != 1 && m != 2) throw std::logic_error("tighten: residual backtrack");
    a.moves.push_back(static_cast<uint8_t>(m));
  }
  Slot in = T.glue(outs.back());
  if (end_corner != in.side)
    throw std::logic_error("tighten: end corner not opposite the entry side");
  return canonical(T, a);
}

std::vector<ArcClass> enumerate_arcs(const IdealTriangulation& T, int max_crossings) {
  if (max_crossings < 0)
    throw std::invalid_argument("enumerate_arcs: negative bound");
  std::vector<ArcClass> out;
  for (int e = 0; e < T.num_edges(); ++e) {
    ArcClass a;
    a.edge_arc = true;
    a.edge = e;
    out.push_back(a);
  }
  // move words in DFS order; keep the lex representative of each
  // itinerary/reversal pair, then keep the simple ones
  std::vector<uint8_t> moves;
  for (int t = 0; t < T.ntri; ++t)
    for (int c = 0; c < 3; ++c) {
      ArcClass a;
      a.start = {t, c};
      auto consider = [&](const std::vector<uint8_t>& mv) {
        a.moves = mv;
        ArcClass r = reversed(T, a);
        if (arc_less(r, a)) return;
        if (self_intersection(T, a) != 0) return;
        out.push_back(a);
      };
      // iterative deepening over word lengths 0..max_crossings-1
      for (int len = 0; len < max_crossings; ++len) {
        moves.assign(len, 1);
        for (;;) {
          consider(moves);
          int i = len - 1;
          while (i >= 0 && moves[i] == 2) --i;
          if (i < 0) break;
          moves[i] = 2;
          for (int k = i + 1; k < len; ++k) moves[k] = 1;
        }
      }
    }
  std::sort(out.begin(), out.end(), arc_less);
  for (size_t i = 0; i + 1 < out.size(); ++i)
    if (out[i] == out[i + 1]) throw std::logic_error("enumerate_arcs: duplicate class");
  return out;
}

std::pair<long long, long long> identify_slope(const IdealTriangulation& T,
                                               const ArcClass& a) {
  if (T.num_edges() != 3)
    throw std::invalid_argument("identify_slope: once-marked torus only");
  if (a.edge_arc) {
    if (a.edge == 0) return {1, 0};
    if (a.edge == 1) return {1, 1};
    return {0, 1};
  }
  long long cnt[3] = {0, 0, 0};
  for (const Step& s : walk(T, a).steps) ++cnt[T.edge_of(s.out)];
  long long P = cnt[2] + 1, Q = cnt[0] + 1, R = cnt[1] + 1;  // |p|,|q|,|p-q|
  long long p = P, q;
  if (R == P + Q)
    q = -Q;
  else if (R == (P > Q ? P - Q : Q - P))
    q = Q;
  else
    throw std::invalid_argument("identify_slope: inconsistent crossing triple");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (std::gcd(p < 0 ? -p : p, q) != 1)
    throw std::invalid_argument("identify_slope: class is not simple");
  return {p, q};
}

}  // namespace arcforge
