#pragma once

#include <string>
#include <vector>

#include "arcforge/surface.hpp"
#include "arcforge/system.hpp"

namespace arcforge {

// The embedded 4-valent graph of an arc system: arcs subdivided at their
// crossings, plus the marked points they end on.  Rotations list half-edges
// counterclockwise; mate pairs the two halves of each edge.
struct RibbonGraph {
  int nmarked = 0;  // vertices [0, nmarked) are marked points, rest crossings
  std::vector<std::vector<int>> rot;
  std::vector<int> mate;
  std::vector<int> hvertex;

  int nvertices() const { return static_cast<int>(rot.size()); }
  int nedges() const { return static_cast<int>(mate.size()) / 2; }
  int nfaces() const;  // orbits of (rotation successor after mate)
  bool is_crossing(int v) const { return v >= nmarked; }
};

RibbonGraph system_to_ribbon_graph(const IdealTriangulation& T,
                                   const ArcSystem& s);

// All complement faces are disks: the graph is connected, touches every
// marked point, and V - E + F matches the closed ambient surface.
bool verify_filling(const RibbonGraph& rg, const IdealTriangulation& T);

// Minimum traversal encoding over all roots, both senses (global reflection)
// and the orbit of triangle-slide moves on all-crossing triangular faces,
// with marked vertices interchangeable.  Equal codes identify systems equal
// up to a homeomorphism preserving the marked-point set.
std::string canonical_code(const RibbonGraph& rg);

struct SystemClass {
  std::string code;
  ArcSystem representative;
  int count = 0;             // input systems in this class
  int size = 0;              // arcs per system
  int j_size = 0;            // members disjoint from all others
  long long crossings = 0;   // total pairwise intersections
  std::vector<int> loops;    // loop counts per marked point, sorted
  bool amphichiral = false;  // equal to its own mirror image (reported only)
  bool swap_symmetric = false;  // fixed by the marked-point swap (reported only)
};

// Group systems by canonical code; classes sorted by code.  Throws if any
// input fails verify_filling.
std::vector<SystemClass> classify(const IdealTriangulation& T,
                                  const std::vector<ArcSystem>& systems,
                                  int threads = 1);

}  // namespace arcforge
