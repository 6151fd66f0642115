#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace qhsd {

// All coefficient arithmetic is arbitrary precision; determinants over
// polynomial rings overflow any fixed width long before catalog sizes do.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rational_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rational_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return rational_den(r) == 1; }

inline bool fits_int64(const Int& v) {
    return v >= Int(INT64_MIN) && v <= Int(INT64_MAX);
}

inline std::string to_string(const Int& v) { return v.str(); }
inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return rational_num(r).str();
    return rational_num(r).str() + "/" + rational_den(r).str();
}

}  // namespace qhsd
