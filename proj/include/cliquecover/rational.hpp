#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace cliquecover {

// Exact rational arithmetic for every bound evaluator in the library.
// All closed-form inequalities are decided on these values, never on doubles.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

// "371/9" for proper fractions, "8" for integers.
std::string to_string(const Rational& r);

Rational parse_rational(const std::string& text);

}  // namespace cliquecover
