#pragma once

#include <cstdint>
#include <string>

#include "wilfkit/error.hpp"
#include "wilfkit/rational.hpp"

namespace wilfkit::detail {

template <typename T>
T checked_add(T a, T b) {
  T out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer overflow in addition");
  return out;
}

template <typename T>
T checked_mul(T a, T b) {
  T out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
  return out;
}

inline BigInt to_big(unsigned __int128 v) {
  BigInt hi = static_cast<std::uint64_t>(v >> 64);
  return (hi << 64) + static_cast<std::uint64_t>(v);
}

}  // namespace wilfkit::detail
