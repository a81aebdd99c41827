#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <stdexcept>

#include "arcforge/formulas.hpp"
#include "arcforge/surface.hpp"
#include "doctest.h"

using namespace arcforge;

TEST_CASE("maximal cardinality on the standard fixtures") {
  CHECK(max_cardinality(Rat(-1), 0) == Rat(4));    // once-marked torus
  CHECK(max_cardinality(Rat(-2), 0) == Rat(12));   // twice-marked torus
  CHECK(max_cardinality(Rat(-1, 2), 1) == Rat(1));
  CHECK(max_cardinality(Rat(-5, 2), 3) == Rat(16));  // 2*(5/2)*(7/2) - 3/2
  CHECK_THROWS_AS(max_cardinality(Rat(0), 0), std::invalid_argument);
  CHECK_THROWS_AS(max_cardinality(Rat(1), 0), std::invalid_argument);
}

TEST_CASE("cut-polygon counts against the closed formula") {
  // Oracle: cutting along c disjoint arcs yields a (2|chi|+2)-gon, and the
  // system is the cut arcs plus all diagonals.  The total must reproduce the
  // closed formula for every feasible (chi, v).
  for (long long g = 0; g <= 3; ++g)
    for (long long b = 0; b <= 3; ++b)
      for (long long p = 0; p <= 6; ++p)
        for (long long v = 0; v <= 8; ++v) {
          if (b == 0 && v > 0) continue;  // boundary points need a boundary
          SurfaceInvariants inv{g, b, p, v};
          Rat chi = inv.chi();
          if (chi >= Rat(0) || chi < Rat(-6)) continue;
          Rat cut = rabs(chi) + Rat(1) - Rat(v, 2);
          if (!is_integer(cut) || cut <= Rat(0)) {
            CHECK_THROWS_AS(polygon_construction_counts(chi, v),
                            std::invalid_argument);
            continue;
          }
          PolygonCounts pc = polygon_construction_counts(chi, v);
          CHECK(Rat(pc.polygon_sides) == Rat(2) * rabs(chi) + Rat(2));
          CHECK(pc.diagonals == pc.polygon_sides * (pc.polygon_sides - 3) / 2);
          CHECK(pc.total == pc.cut_arcs + pc.diagonals);
          CHECK(Rat(pc.total) == max_cardinality(chi, v));
        }
}

TEST_CASE("twice-marked torus counts") {
  PolygonCounts pc = polygon_construction_counts(Rat(-2), 0);
  CHECK(pc.cut_arcs == 3);
  CHECK(pc.polygon_sides == 6);
  CHECK(pc.diagonals == 9);
  CHECK(pc.total == 12);
}

TEST_CASE("slope intersection determinant rule") {
  CHECK(slope_intersection(1, 0, 0, 1) == 0);
  CHECK(slope_intersection(1, 1, -1, 1) == 1);
  CHECK(slope_intersection(2, 1, 1, 2) == 2);
  CHECK(slope_intersection(1, 0, 1, 0) == 0);    // same class
  CHECK(slope_intersection(1, 2, -1, -2) == 0);  // proportional
  CHECK_THROWS_AS(slope_intersection(2, 4, 1, 0), std::invalid_argument);

  // symmetric, and invariant under negating a class representative
  for (long long a = -4; a <= 4; ++a)
    for (long long b = -4; b <= 4; ++b)
      for (long long c = -4; c <= 4; ++c)
        for (long long d = -4; d <= 4; ++d) {
          if (std::gcd(std::abs(a), std::abs(b)) != 1) continue;
          if (std::gcd(std::abs(c), std::abs(d)) != 1) continue;
          long long i = slope_intersection(a, b, c, d);
          CHECK(i >= 0);
          CHECK(i == slope_intersection(c, d, a, b));
          CHECK(i == slope_intersection(-a, -b, c, d));
        }
}

TEST_CASE("family tags round-trip") {
  for (const char* s : {"VV", "WW", "WhW", "XW", "VW", "YY", "CC", "CD"})
    CHECK(family_tag_to_string(family_tag_from_string(s)) == s);
  CHECK_THROWS_AS(family_tag_from_string("ZZ"), std::invalid_argument);
}

TEST_CASE("family intersection counts") {
  // V_j vs V_k depends on the index differences to the shared pair
  CHECK(family_intersection(FamilyTag::VV, Rat(1), Rat(1)) == 1);
  CHECK(family_intersection(FamilyTag::VV, Rat(1), Rat(-1)) == 0);
  CHECK(family_intersection(FamilyTag::VV, Rat(2), Rat(1)) == 2);
  CHECK(family_intersection(FamilyTag::VV, Rat(0), Rat(3)) == 2);
  CHECK_THROWS(family_intersection(FamilyTag::VV, Rat(0), Rat(0)));

  CHECK(family_intersection(FamilyTag::WW, Rat(1, 2), Rat(3, 2)) == 0);
  CHECK(family_intersection(FamilyTag::WW, Rat(1, 2), Rat(7, 2)) == 2);
  CHECK(family_intersection(FamilyTag::WhW, Rat(1, 2), Rat(9, 2)) == 0);

  CHECK(family_intersection(FamilyTag::XW, Rat(0), Rat(1, 2)) == 0);
  CHECK(family_intersection(FamilyTag::XW, Rat(0), Rat(5, 2)) == 4);
  CHECK(family_intersection(FamilyTag::VW, Rat(0), Rat(5, 2)) == 2);

  CHECK(family_intersection(FamilyTag::YY, Rat(1, 3), Rat(2, 3)) == 0);
  CHECK(family_intersection(FamilyTag::YY, Rat(1, 3), Rat(4, 3)) == 0);
  CHECK(family_intersection(FamilyTag::YY, Rat(1, 3), Rat(5, 3)) == 1);

  CHECK(family_intersection(FamilyTag::CC, Rat(1, 2), Rat(1)) == 0);
  CHECK(family_intersection(FamilyTag::CC, Rat(1, 2), Rat(2)) == 1);
  CHECK(family_intersection(FamilyTag::CD, Rat(1, 2), Rat(1, 2)) == 0);
  CHECK(family_intersection(FamilyTag::CD, Rat(0), Rat(3, 2)) == 1);

  // symmetry where both indices range over the same family
  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b) {
      if (a != b) {
        CHECK(family_intersection(FamilyTag::WW, Rat(2 * a + 1, 2), Rat(2 * b + 1, 2)) ==
              family_intersection(FamilyTag::WW, Rat(2 * b + 1, 2), Rat(2 * a + 1, 2)));
        CHECK(family_intersection(FamilyTag::YY, Rat(a, 3), Rat(b, 3)) ==
              family_intersection(FamilyTag::YY, Rat(b, 3), Rat(a, 3)));
        CHECK(family_intersection(FamilyTag::CC, Rat(a, 2), Rat(b, 2)) ==
              family_intersection(FamilyTag::CC, Rat(b, 2), Rat(a, 2)));
      }
      CHECK(family_intersection(FamilyTag::WhW, Rat(2 * a + 1, 2), Rat(2 * b + 1, 2)) == 0);
    }
}
