#include "eulerbrick/isqrt.hpp"

namespace eulerbrick {

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return out;
}

u64 isqrt_floor(u128 v) {
  if (v < 2) return static_cast<u64>(v);
  // Newton iteration from an over-estimate 2^ceil(bits/2); decreases monotonically.
  int bits = 0;
  for (u128 t = v; t != 0; t >>= 1) ++bits;
  u128 x = static_cast<u128>(1) << ((bits + 1) / 2);
  for (;;) {
    u128 y = (x + v / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  return static_cast<u64>(x);
}

std::optional<u64> isqrt_exact(u128 v) {
  // Quadratic residues mod 64 reject most non-squares cheaply.
  constexpr u64 kResidues64 = 0x0202021202030213ULL;
  if (((kResidues64 >> static_cast<unsigned>(v & 63)) & 1U) == 0) return std::nullopt;
  u64 w = isqrt_floor(v);
  if (square(w) != v) return std::nullopt;
  return w;
}

}  // namespace eulerbrick
