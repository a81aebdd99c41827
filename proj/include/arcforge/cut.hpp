#pragma once

#include <vector>

#include "arcforge/surface.hpp"
#include "arcforge/system.hpp"

namespace arcforge {

struct CutResult {
  std::vector<SurfaceInvariants> components;  // sorted by (g, b, p, v)
  long long boundary_marked_total = 0;        // sum of v over components
  ArcSystem along;
};

// Components of the surface cut along a family of pairwise disjoint arcs,
// reported by numeric invariants; throws if the arcs are not disjoint.
CutResult cut_along(const IdealTriangulation& T, const ArcSystem& b);

bool complement_is_connected(const IdealTriangulation& T, const ArcSystem& j);

}  // namespace arcforge
