#pragma once
#include <array>
#include <vector>

#include "arcforge/arc.hpp"

namespace arcforge {

// Combinatorial minimal-position realization of a finite set of taut arcs:
// per-edge linear orders of crossing points, per-triangle chords through an
// expanded boundary cycle, and the interleaved chord pairs (= crossings).

struct PortRef {
  bool side_port = false;
  Slot slot{};      // side ports: the slot as seen from this triangle
  Corner corner{};  // corner germs (arc endpoints, edge-class chord ends)
  int index = 0;    // index in the slot-local event order / fan order
};

struct LayoutChord {
  int arc = 0;
  int leg = 0;  // 0..crossings(): position of the chord along the arc
  int tri = 0;
  PortRef entry, exit;
  int pos_entry = 0, pos_exit = 0;  // expanded-cycle positions in tri
};

struct LayoutCrossing {
  int tri = 0;
  int chord_lo = 0, chord_hi = 0;  // global chord ids, lo < hi
};

// end 0 = start germ (edge classes: the corner ref_side+1 end),
// end 1 = end germ  (edge classes: the corner ref_side+2 end).
struct FanGerm {
  int arc = 0;
  int end = 0;
};

class Layout {
 public:
  const IdealTriangulation* T = nullptr;
  std::vector<ArcClass> arcs;
  std::vector<ArcWalk> walks;

  struct Event {
    int arc = 0;
    int idx = 0;  // step index along the arc
  };
  // events per edge, ordered along the reference slot's local coordinate
  std::vector<std::vector<Event>> edge_events;
  // the same events per (triangle, side), in that slot's local coordinate
  std::vector<std::array<std::vector<Event>, 3>> side_events;
  // corner germ fans, ordered along the corner's ccw fan coordinate
  std::vector<std::array<std::vector<FanGerm>, 3>> fans;

  std::vector<LayoutChord> chords;
  std::vector<int> arc_chord_begin;  // chord id of each arc's leg 0
  std::vector<int> cycle_size;       // ports per triangle
  // expanded-cycle position of fan germ k at (t,c) is fan_start[t][c] + k;
  // of side event k at (t,s) it is side_start[t][s] + k
  std::vector<std::array<int, 3>> fan_start, side_start;

  std::vector<LayoutCrossing> crossings;
  std::vector<std::vector<int>> chord_crossings;  // ordered along each chord
  std::vector<std::vector<int>> arc_crossings;    // ordered along each arc

  int chord_of(int arc, int leg) const { return arc_chord_begin[arc] + leg; }
  // crossings between arcs i and j (self-crossings when i == j)
  long long pair_count(int i, int j) const;
};

Layout make_layout(const IdealTriangulation& T, std::vector<ArcClass> arcs);

// Arc-end germs around each marked point, in ccw rotational order.  Corner
// fans run clockwise around their vertex, so each wedge contributes its fan
// reversed, wedges chained by next_wedge_ccw from the smallest corner.
struct VertexGerm {
  Corner at{};
  int fan_index = 0;
  FanGerm germ{};
};
std::vector<std::vector<VertexGerm>> vertex_germ_cycles(const Layout& L);

long long geometric_intersection(const IdealTriangulation& T, const ArcClass& a,
                                 const ArcClass& b);
long long self_intersection(const IdealTriangulation& T, const ArcClass& a);

}  // namespace arcforge
