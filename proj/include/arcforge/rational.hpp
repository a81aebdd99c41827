#pragma once
#include <boost/rational.hpp>
#include <string>

namespace arcforge {

using Rat = boost::rational<long long>;

// boost::rational keeps denominator() > 0, which the helpers below rely on.

inline long long rfloor(const Rat& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

inline long long rceil(const Rat& r) { return -rfloor(-r); }

inline Rat rabs(const Rat& r) { return r < Rat(0) ? -r : r; }

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

inline std::string rat_str(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace arcforge
