#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace minuscule {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Serializes as "num/den" with a positive denominator, always including it.
inline std::string to_fraction_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// Parses "n", "-n", or "n/d".
inline Rational parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(BigInt(text));
  return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

using RationalMatrix = std::vector<std::vector<Rational>>;

}  // namespace minuscule
