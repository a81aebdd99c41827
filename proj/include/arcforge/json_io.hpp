#pragma once

#include <string>
#include <vector>

#include "arcforge/arc.hpp"
#include "arcforge/classify.hpp"
#include "arcforge/surface.hpp"
#include "arcforge/system.hpp"

namespace arcforge {

// All serializers produce key-order-stable text, so identical inputs give
// byte-identical files.

std::string triangulation_to_json(const IdealTriangulation& T);
IdealTriangulation triangulation_from_json(const std::string& text);

std::string arc_to_json(const IdealTriangulation& T, const ArcClass& a);
// Rebuilds the path from the start corner and the crossed-edge list, then
// tightens; malformed records throw.
ArcClass arc_from_json(const IdealTriangulation& T, const std::string& text);

std::string arcs_to_json(const IdealTriangulation& T,
                         const std::vector<ArcClass>& arcs);
std::vector<ArcClass> arcs_from_json(const IdealTriangulation& T,
                                     const std::string& text);

std::string system_to_json(const IdealTriangulation& T, const ArcSystem& s);
ArcSystem system_from_json(const IdealTriangulation& T, const std::string& text);

std::string systems_to_json(const IdealTriangulation& T,
                            const std::vector<ArcSystem>& ss);
std::vector<ArcSystem> systems_from_json(const IdealTriangulation& T,
                                         const std::string& text);

std::string matrix_to_json(const IdealTriangulation& T,
                           const std::vector<ArcClass>& arcs,
                           const std::vector<std::vector<long long>>& m);

std::string catalog_to_json(const IdealTriangulation& T,
                            const std::vector<SystemClass>& classes);

}  // namespace arcforge
