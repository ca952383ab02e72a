#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace wilfkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Always "p/q" with q >= 1, including integers ("2/1").
std::string to_string(const Rational& r);

/// Accepts "p/q", "p" or "-p/q" (whitespace trimmed). Throws ParseError.
Rational parse_rational(std::string_view text);

BigInt floor_of(const Rational& r);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

/// Lossy; for reporting distances against float tolerances only.
double to_double(const Rational& r);

}  // namespace wilfkit
