#pragma once

#include <cstdint>

#include "stk/errors.hpp"

namespace stk {

// All quantities in this library are exact 64-bit integers. Anything that
// could leave the range throws Overflow rather than wrapping.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("integer overflow in addition");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer overflow in multiplication");
  return r;
}

// Floor/ceil division with a positive divisor and an operand of either sign.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline Int ceil_div(Int a, Int b) {
  Int q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

}  // namespace stk
