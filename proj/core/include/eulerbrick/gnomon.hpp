#pragma once

// Gnomons as arithmetic progressions of odd numbers with step 2.
//
// A gnomon of thickness T placed on a square of side `base` covers the
// odd terms 2*base+1, 2*base+3, ..., 2*(base+T)-1. Its area is
// (base+T)^2 - base^2 = T * middle, where middle = 2*base + T.

#include <iosfwd>
#include <string>
#include <vector>

#include "eulerbrick/arith.hpp"
#include "eulerbrick/ppt.hpp"

namespace eulerbrick {

/// Exact value with denominator 1 or 2.
struct HalfInteger {
  u64 twice = 0;

  static constexpr HalfInteger of(u64 v) { return {2 * v}; }
  constexpr bool is_integer() const { return twice % 2 == 0; }
  /// Integer part; only meaningful when is_integer().
  constexpr u64 value() const { return twice / 2; }

  friend bool operator==(const HalfInteger&, const HalfInteger&) = default;
};

struct GnomonDescriptor {
  u64 area = 0;
  u64 thickness = 0;  // number of AP terms
  u64 first = 0;
  HalfInteger middle;
  u64 last = 0;
  u64 base = 0;

  /// Gnomon of thickness T wrapped around a square of side base.
  static GnomonDescriptor on_base(u64 base, u64 thickness);

  /// base == 0: the gnomon is a full square.
  bool degenerate() const { return base == 0; }
  /// Side of the square after the gnomon is added.
  u64 outer_side() const { return base + thickness; }

  /// Explicit terms first, first+2, ..., last.
  std::vector<u64> terms() const;

  friend bool operator==(const GnomonDescriptor&, const GnomonDescriptor&) = default;
};

/// The two gnomons of one triple; both end on the term 2a - 1.
struct ConnectedGnomons {
  GnomonDescriptor of_even_leg;  // area y^2, thickness 2t^2, placed on x
  GnomonDescriptor of_odd_leg;   // area x^2, thickness l^2, placed on y
};

ConnectedGnomons connected_gnomons(const PrimitiveTriple& tr);

enum class LegDirection { x_to_y, y_to_x };

/// x_to_y: 2t(l+t); y_to_x: l(l+2t).
u64 map_leg(const GeneratingSquare& gen, LegDirection direction);

/// Re-thicken a gnomon of the given area to new_thickness, keeping the area.
/// Throws NotRepresentable when the thickness does not divide the area, when
/// area/T - T is odd, or when area/T < T.
GnomonDescriptor transform_gnomon(u64 area, u64 new_thickness);

/// Gnomon of the k-scaled triple: area k^2 * area, thickness k * T, base k * base.
GnomonDescriptor scale_gnomon(const GnomonDescriptor& g, u64 k);

/// Every thickness accepted by transform_gnomon for this area, increasing.
std::vector<u64> admissible_thicknesses(u64 area);

/// True when the terms of `shorter` are exactly the last terms of `longer`.
bool is_tail_of(const GnomonDescriptor& shorter, const GnomonDescriptor& longer);
/// True when the terms of `shorter` are exactly the first terms of `longer`.
bool is_head_of(const GnomonDescriptor& shorter, const GnomonDescriptor& longer);

/// Space separated terms, ten per line.
void write_terms(std::ostream& os, const GnomonDescriptor& g);
std::string format_terms(const GnomonDescriptor& g);

}  // namespace eulerbrick
