#pragma once

// Ordered primitive Pythagorean triples built from generating squares.
//
// A generating square has even side S = 2*t*l with gcd(t, l) = 1 and l odd.
// Its triple is
//   x = S + l^2      = l*(l + 2t)      (odd leg)
//   y = S + 2*t^2    = 2t*(l + t)      (even leg)
//   a = S + 2t^2 + l^2                 (hypotenuse)
// Triples are ordered by S = 2, 4, 6, ... and inside one S by increasing t.

#include <optional>
#include <vector>

#include "eulerbrick/arith.hpp"

namespace eulerbrick {

struct GeneratingSquare {
  u64 S = 0;
  u64 t = 0;
  u64 l = 0;

  /// Builds (2tl, t, l) after checking the invariants.
  static GeneratingSquare from_tl(u64 t, u64 l);

  bool valid() const noexcept;
  /// Throws InvalidInput when S != 2tl, gcd(t,l) != 1 or l is even.
  void validate() const;

  friend bool operator==(const GeneratingSquare&, const GeneratingSquare&) = default;
};

struct PrimitiveTriple {
  u64 x = 0;  // odd leg
  u64 y = 0;  // even leg
  u64 a = 0;  // hypotenuse
  GeneratingSquare gen;

  friend bool operator==(const PrimitiveTriple&, const PrimitiveTriple&) = default;
};

/// N = S/2 (first level), n = 1..L(S) (position by increasing t).
struct OrdinalIndex {
  u64 N = 0;
  u64 n = 0;

  friend auto operator<=>(const OrdinalIndex&, const OrdinalIndex&) = default;
};

/// Classical parameters: m = l + t, n = t.
struct MnParams {
  u64 m = 0;
  u64 n = 0;

  bool valid() const noexcept;
  void validate() const;

  friend bool operator==(const MnParams&, const MnParams&) = default;
};

struct OrderedTriple {
  OrdinalIndex index;
  PrimitiveTriple triple;
};

/// Every generating square of side S, by increasing t. Size is 2^r, r = distinct odd primes of S.
std::vector<GeneratingSquare> partitions_of(u64 S);

/// L(S) = 2^r.
u64 count_L(u64 S);

PrimitiveTriple triple_from(const GeneratingSquare& gen);

/// Classical route: x = m^2 - n^2, y = 2mn, a = m^2 + n^2.
PrimitiveTriple triple_from_mn(const MnParams& mn);

MnParams to_mn(const GeneratingSquare& gen);
GeneratingSquare from_mn(const MnParams& mn);

/// Position of gen inside its S block.
OrdinalIndex ordinal_of(const GeneratingSquare& gen);

/// Generating square of the PPT with legs (odd x, even y), if (x, y) are the legs of one.
std::optional<GeneratingSquare> locate(u64 x, u64 y);

/// All (t, l) with y = 2t(l + t); ascending S. Empty when y is not a PPT even leg.
std::vector<GeneratingSquare> representations_of_even_leg(u64 y);

/// All (t, l) with x = l(l + 2t); ascending S. Empty for x = 1.
std::vector<GeneratingSquare> representations_of_odd_leg(u64 x);

/// Pull-style stream over the ordered table for S = S_first, S_first + 2, ..., S_max.
class TripleStream {
 public:
  explicit TripleStream(u64 S_max, u64 S_first = 2);

  std::optional<OrderedTriple> next();

 private:
  u64 S_max_;
  u64 S_;
  std::vector<GeneratingSquare> block_;
  std::size_t pos_ = 0;
};

/// Materialized stream for S = 2..S_max.
std::vector<OrderedTriple> enumerate_ordered(u64 S_max);

}  // namespace eulerbrick
