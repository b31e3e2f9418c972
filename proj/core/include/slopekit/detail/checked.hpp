#pragma once

#include <cstdint>
#include <numeric>

#include "slopekit/error.hpp"

namespace slopekit::detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError(ErrorCode::Overflow, "integer addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw DomainError(ErrorCode::Overflow, "integer subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError(ErrorCode::Overflow, "integer multiplication");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

// a*d - b*c without intermediate overflow.
inline std::int64_t det2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  const __int128 r = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
  if (r > INT64_MAX || r < INT64_MIN) throw DomainError(ErrorCode::Overflow, "2x2 determinant");
  return static_cast<std::int64_t>(r);
}

// Sign of a*d - b*c, exact for all 64-bit inputs.
inline int det2_sign(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  const __int128 r = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
  return (r > 0) - (r < 0);
}

inline int dot2_sign(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  const __int128 r = static_cast<__int128>(a) * c + static_cast<__int128>(b) * d;
  return (r > 0) - (r < 0);
}

// Floor division for b > 0.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

inline std::int64_t abs_gcd(std::int64_t a, std::int64_t b) {
  if (a == INT64_MIN || b == INT64_MIN) throw DomainError(ErrorCode::Overflow, "gcd of INT64_MIN");
  return std::gcd(a, b);
}

}  // namespace slopekit::detail
