#pragma once

#include <string>

#include "arcforge/surface.hpp"
#include "arcforge/system.hpp"

namespace arcforge {

// Draws the fixture as a row of Euclidean triangles with every arc as its
// chord sequence, one path per arc, plus marked-point dots and crossing
// markers.  Output is byte-identical for identical inputs.  Throws when the
// system was recorded for a different fixture.
std::string render_svg(const IdealTriangulation& T, const ArcSystem& s);

}  // namespace arcforge
