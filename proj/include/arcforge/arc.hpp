#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "arcforge/surface.hpp"

namespace arcforge {

// A taut itinerary names an arc class: no slot backtracking, first crossing
// opposite the start corner, end corner opposite the final entry side.  Each
// essential arc class has exactly one taut itinerary up to reversal; edge
// classes (crossing nothing) are named by their edge id instead.
struct ArcClass {
  bool edge_arc = false;
  int edge = -1;                // valid when edge_arc
  Corner start{};               // valid when !edge_arc
  std::vector<uint8_t> moves;   // entries in {1,2}: exit side = entry side + m

  int crossings() const {
    return edge_arc ? 0 : static_cast<int>(moves.size()) + 1;
  }
  bool operator==(const ArcClass& o) const {
    if (edge_arc != o.edge_arc) return false;
    return edge_arc ? edge == o.edge : (start == o.start && moves == o.moves);
  }
};

// Total order: edge classes by id first, then by (crossings, start, moves).
bool arc_less(const ArcClass& a, const ArcClass& b);

// One transversal crossing of the arc with a triangulation edge: the slot it
// leaves through and the slot it enters.
struct Step {
  Slot out;
  Slot in;
};

struct ArcWalk {
  std::vector<Step> steps;  // empty for edge classes
  Corner start{};           // == {out0.tri, out0.side} read as a corner
  Corner end{};             // opposite the final entry side
};

ArcWalk walk(const IdealTriangulation& T, const ArcClass& a);

ArcClass reversed(const IdealTriangulation& T, const ArcClass& a);

// Lex-min of the itinerary and its reversal.
ArcClass canonical(const IdealTriangulation& T, const ArcClass& a);

// Marked points at the two ends, in itinerary order.
std::pair<int, int> endpoints(const IdealTriangulation& T, const ArcClass& a);

// A possibly loose path: start corner, exit slots in order, end corner index
// in the final triangle.
struct RawPath {
  Corner start{};
  std::vector<Slot> outs;
  int end_corner = -1;
};

// Remove slot backtracks and endpoint half-slides until taut; degenerate
// inputs (null-homotopic into a marked point) throw std::invalid_argument.
ArcClass tighten(const IdealTriangulation& T, const RawPath& p);

// All simple essential arc classes crossing at most max_crossings edges,
// canonical and sorted by arc_less.
std::vector<ArcClass> enumerate_arcs(const IdealTriangulation& T, int max_crossings);

// Slope of an arc on the once-marked torus, read off from its crossing
// counts with the three triangulation edges.  Normalized: q > 0, or (1,0).
std::pair<long long, long long> identify_slope(const IdealTriangulation& T,
                                               const ArcClass& a);

}  // namespace arcforge
