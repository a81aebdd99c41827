#include "arcforge/formulas.hpp"

#include <numeric>
#include <stdexcept>

namespace arcforge {

Rat max_cardinality(const Rat& chi, long long v) {
  if (chi >= Rat(0))
    throw std::invalid_argument("max_cardinality: chi must be negative, got " + rat_str(chi));
  Rat a = rabs(chi);
  return Rat(2) * a * (a + Rat(1)) - Rat(v, 2);
}

long long slope_intersection(long long a, long long b, long long c, long long d) {
  auto coprime = [](long long x, long long y) {
    return std::gcd(x < 0 ? -x : x, y < 0 ? -y : y) == 1;
  };
  if (!coprime(a, b) || !coprime(c, d))
    throw std::invalid_argument("slope_intersection: slope entries must be coprime");
  long long det = a * d - b * c;
  if (det < 0) det = -det;
  if (det == 0) return 0;  // proportional slopes name the same class
  return det - 1;
}

FamilyTag family_tag_from_string(const std::string& s) {
  if (s == "VV") return FamilyTag::VV;
  if (s == "WW") return FamilyTag::WW;
  if (s == "WhW") return FamilyTag::WhW;
  if (s == "XW") return FamilyTag::XW;
  if (s == "VW") return FamilyTag::VW;
  if (s == "YY") return FamilyTag::YY;
  if (s == "CC") return FamilyTag::CC;
  if (s == "CD") return FamilyTag::CD;
  throw std::invalid_argument("unknown family tag: " + s);
}

std::string family_tag_to_string(FamilyTag t) {
  switch (t) {
    case FamilyTag::VV: return "VV";
    case FamilyTag::WW: return "WW";
    case FamilyTag::WhW: return "WhW";
    case FamilyTag::XW: return "XW";
    case FamilyTag::VW: return "VW";
    case FamilyTag::YY: return "YY";
    case FamilyTag::CC: return "CC";
    case FamilyTag::CD: return "CD";
  }
  throw std::logic_error("family_tag_to_string");
}

namespace {

void need(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("family_intersection: ") + what);
}

bool is_int(const Rat& r) { return r.denominator() == 1; }
bool is_half(const Rat& r) { return r.denominator() == 2; }          // Z + 1/2
bool is_halves(const Rat& r) { return r.denominator() <= 2; }        // (1/2)Z
bool is_thirds(const Rat& r) { return r.denominator() == 1 || r.denominator() == 3; }

}  // namespace

long long family_intersection(FamilyTag tag, const Rat& j, const Rat& k) {
  switch (tag) {
    case FamilyTag::VV: {
      need(is_int(j) && is_int(k), "VV takes an integer difference pair");
      need(!(j == Rat(0) && k == Rat(0)), "VV difference pair must be nonzero");
      long long dj = j.numerator(), dk = k.numerator();
      long long s = (dj < 0 ? -dj : dj) + (dk < 0 ? -dk : dk);
      return dj * dk < 0 ? s - 2 : s - 1;
    }
    case FamilyTag::WW:
      need(is_half(j) && is_half(k), "WW indices lie in Z+1/2");
      need(j != k, "WW indices must differ");
      return rabs(j - k).numerator() - 1;  // |j-k| is a positive integer here
    case FamilyTag::WhW:
      need(is_half(j) && is_half(k), "WhW indices lie in Z+1/2");
      return 0;
    case FamilyTag::XW:
      need(is_int(j), "XW first index lies in Z");
      need(is_half(k), "XW second index lies in Z+1/2");
      return 2 * rfloor(rabs(j - k));
    case FamilyTag::VW:
      need(is_int(j), "VW first index lies in Z");
      need(is_half(k), "VW second index lies in Z+1/2");
      return rfloor(rabs(j - k));
    case FamilyTag::YY:
      need(is_thirds(j) && is_thirds(k), "YY indices lie in (1/3)Z");
      need(j != k, "YY indices must differ");
      return rceil(rabs(j - k)) - 1;
    case FamilyTag::CC:
      need(is_halves(j) && is_halves(k), "CC indices lie in (1/2)Z");
      need(j != k, "CC indices must differ");
      return rceil(rabs(j - k)) - 1;
    case FamilyTag::CD:
      need(is_halves(j) && is_halves(k), "CD indices lie in (1/2)Z");
      return rfloor(rabs(j - k));
  }
  throw std::logic_error("family_intersection");
}

PolygonCounts polygon_construction_counts(const Rat& chi, long long v) {
  Rat total = max_cardinality(chi, v);  // validates chi < 0
  Rat a = rabs(chi);
  Rat cut = a + Rat(1) - Rat(v, 2);
  if (!is_integer(cut) || cut <= Rat(0))
    throw std::invalid_argument("polygon_construction_counts: infeasible (cut arc count " +
                                rat_str(cut) + " is not a positive integer)");
  Rat sides = Rat(2) * a + Rat(2);
  if (!is_integer(sides))
    throw std::invalid_argument("polygon_construction_counts: infeasible polygon side count");
  PolygonCounts out;
  out.cut_arcs = cut.numerator();
  out.polygon_sides = sides.numerator();
  out.diagonals = out.polygon_sides * (out.polygon_sides - 3) / 2;
  out.total = out.cut_arcs + out.diagonals;
  if (Rat(out.total) != total)
    throw std::logic_error("polygon_construction_counts: totals disagree");
  return out;
}

}  // namespace arcforge
