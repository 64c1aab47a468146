#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dcn {

// Exact arbitrary-precision scalars. All counts and series coefficients in
// this library are exact; there is no floating-point mode.
using BigInt = boost::multiprecision::cpp_int;

// Always stored reduced with positive denominator.
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const BigRational& v) { return v.str(); }

inline BigRational rational_from_string(const std::string& s) { return BigRational(s); }

inline BigRational ratio(long long num, long long den) {
  return BigRational(BigInt(num), BigInt(den));
}

}  // namespace dcn
