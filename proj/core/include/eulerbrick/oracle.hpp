#pragma once

// Brute-force ground truth. Nothing here uses the generating-square
// machinery; the only shared primitive is isqrt_exact.

#include <array>
#include <optional>
#include <vector>

#include "eulerbrick/arith.hpp"
#include "eulerbrick/isqrt.hpp"

namespace eulerbrick::oracle {

struct Triple {
  u64 x = 0;  // odd leg
  u64 y = 0;  // even leg
  u64 a = 0;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Edges x < y < z with all three face diagonals.
struct Brick {
  u64 x = 0, y = 0, z = 0;
  u64 a = 0, b = 0, c = 0;  // over (x,y), (y,z), (x,z)
  friend auto operator<=>(const Brick&, const Brick&) = default;

  bool primitive() const;
};

/// x^2+y^2 = a^2, y^2+z^2 = b^2, x^2+z^2 = c^2 with exact arithmetic.
bool satisfies_face_system(u64 x, u64 y, u64 z, u64 a, u64 b, u64 c);

/// Face diagonals of the box (x, y, z) when all three are integers.
std::optional<std::array<u64, 3>> face_diagonals(u64 x, u64 y, u64 z);

/// Every primitive triple with hypotenuse <= a_max, from coprime (m, n) of opposite parity. Sorted.
std::vector<Triple> classical_ppt_enum(u64 a_max);

/// Every Euler brick with x < y < z <= max_edge, primitive or not, ascending.
std::vector<Brick> brute_force_bricks(u64 max_edge, unsigned workers = 1);

/// Stirling numbers of the second kind by the recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1).
class StirlingTable {
 public:
  /// Columns k > max_k are not stored; by default the full triangle.
  explicit StirlingTable(unsigned max_n, unsigned max_k = ~0U);

  unsigned max_n() const { return max_n_; }
  unsigned max_k() const { return max_k_; }
  /// S(n, k) for k <= min(n, max_k), n <= max_n; 0 for k > n. Throws for unstored cells.
  u128 at(unsigned n, unsigned k) const;

 private:
  unsigned max_n_;
  unsigned max_k_;
  std::vector<std::vector<u128>> rows_;
};

/// S(n,1) + S(n,2), checked against 2^(n-1); throws ValidationError on mismatch.
u64 stirling_count_check(unsigned n);

}  // namespace eulerbrick::oracle
