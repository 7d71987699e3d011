#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tsid {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline BigInt ipow(std::int64_t base, unsigned exp) { return ipow(BigInt(base), exp); }

/// 2^k as a rational, k may be negative.
inline Rational pow2(int k) {
  BigInt p = ipow(BigInt(2), static_cast<unsigned>(k < 0 ? -k : k));
  return k < 0 ? Rational(BigInt(1), p) : Rational(p);
}

inline std::string to_string(const BigInt& x) { return x.str(); }

/// Exact value of "p/q", "-1.25" or "7". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace tsid
