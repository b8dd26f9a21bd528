#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace woc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

/// Binomial coefficient, zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

BigInt factorial(long n);

BigInt pow2(long e);

}  // namespace woc
