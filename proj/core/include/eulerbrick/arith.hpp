#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace eulerbrick {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

/// Precondition violated by a caller (odd S, even leg passed as odd, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A gnomon transformation that has no integer realization.
class NotRepresentable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An intermediate value left the 64-bit range. Raised instead of wrapping.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A constructed object failed an independent exact re-check.
class ValidationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline u64 narrow(u128 v, const char* what) {
  if (v > std::numeric_limits<u64>::max()) {
    throw OverflowError(std::string("64-bit overflow in ") + what);
  }
  return static_cast<u64>(v);
}

inline u64 add_checked(u64 a, u64 b, const char* what = "addition") {
  u64 r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError(std::string("64-bit overflow in ") + what);
  return r;
}

inline u64 mul_checked(u64 a, u64 b, const char* what = "multiplication") {
  u64 r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(std::string("64-bit overflow in ") + what);
  return r;
}

constexpr u128 square(u64 v) { return static_cast<u128>(v) * v; }

/// Sum of squares. Three 64-bit squares always fit in 128 bits.
constexpr u128 sum_squares(u64 a, u64 b) { return square(a) + square(b); }
constexpr u128 sum_squares(u64 a, u64 b, u64 c) { return square(a) + square(b) + square(c); }

/// Decimal rendering of a 128-bit value.
std::string to_string(u128 v);

}  // namespace eulerbrick
