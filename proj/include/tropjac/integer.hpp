#pragma once

#include <cstdint>
#include <vector>

#include "tropjac/error.hpp"

namespace tropjac {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer multiplication");
  return r;
}

// floor division and matching nonnegative remainder for b > 0
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int mod_floor(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

struct ExtGcd {
  Int g, x, y;  // g = a*x + b*y, g >= 0
};

ExtGcd ext_gcd(Int a, Int b);

IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const IntVector& a, Int k);
Int dot(const IntVector& a, const IntVector& b);
bool is_zero(const IntVector& a);

}  // namespace tropjac
