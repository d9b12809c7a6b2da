#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace chambers {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// floor of an exact rational.
inline Int rat_floor(const Rat& r) {
  Int n = numerator(r), d = denominator(r);  // d > 0 by normalization
  Int q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

inline long long to_ll(const Int& v) { return v.convert_to<long long>(); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline std::string rat_str(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace chambers
