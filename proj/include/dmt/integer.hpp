#pragma once

#include <cstdint>

#include "dmt/error.hpp"

namespace dmt {

// Coefficients are int64 and every operation is checked.
using Integer = std::int64_t;

inline Integer checked_add(Integer a, Integer b) {
  Integer r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow (add)");
  return r;
}

inline Integer checked_sub(Integer a, Integer b) {
  Integer r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow (sub)");
  return r;
}

inline Integer checked_mul(Integer a, Integer b) {
  Integer r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow (mul)");
  return r;
}

inline Integer checked_neg(Integer a) { return checked_sub(0, a); }

// result in [0, m)
inline Integer mod_floor(Integer a, Integer m) {
  Integer r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace dmt
