#pragma once
#include <string>

#include "arcforge/rational.hpp"

namespace arcforge {

// Size of a maximal 1-system on a marked surface: 2|chi|(|chi|+1) - v/2.
// Requires chi < 0.
Rat max_cardinality(const Rat& chi, long long v);

// Minimal intersection number of the slope classes a/b and c/d on the
// once-marked torus: |ad - bc| - 1, with proportional slopes mapping to the
// same class (result 0).  Both pairs must be coprime.
long long slope_intersection(long long a, long long b, long long c, long long d);

// Index-parameterized arc families and their pairwise intersection counts.
// VV takes the index difference pair (dj, dk) in Z^2 \ {(0,0)}; W indices lie
// in Z+1/2, X and the V index of VW in Z, Y indices in (1/3)Z, C/D in (1/2)Z.
enum class FamilyTag { VV, WW, WhW, XW, VW, YY, CC, CD };

FamilyTag family_tag_from_string(const std::string& s);
std::string family_tag_to_string(FamilyTag t);

long long family_intersection(FamilyTag tag, const Rat& j, const Rat& k);

// Counting data of the cut-polygon construction: the number of disjoint cut
// arcs, the polygon side count after cutting, its diagonal count, and the
// total system size (which equals max_cardinality).
struct PolygonCounts {
  long long cut_arcs = 0;
  long long polygon_sides = 0;
  long long diagonals = 0;
  long long total = 0;
  bool operator==(const PolygonCounts&) const = default;
};

PolygonCounts polygon_construction_counts(const Rat& chi, long long v);

}  // namespace arcforge
