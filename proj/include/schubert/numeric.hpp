#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schubert/error.hpp"

namespace schubert {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& value) { return value.str(); }

inline std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::InvalidArgument, "integer overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::InvalidArgument, "integer overflow");
  return r;
}

/// Removes trailing zeros, the canonical form for finitely supported sequences.
template <typename T>
std::vector<T> strip_trailing_zeros(std::vector<T> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

/// Pads (or keeps) a finitely supported sequence to at least `n` entries.
template <typename T>
std::vector<T> padded(std::vector<T> v, std::size_t n) {
  if (v.size() < n) v.resize(n, T{0});
  return v;
}

}  // namespace schubert
