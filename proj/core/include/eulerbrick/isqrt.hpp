#pragma once

#include <optional>

#include "eulerbrick/arith.hpp"

namespace eulerbrick {

/// floor(sqrt(v)), computed with integer operations only.
u64 isqrt_floor(u128 v);

/// w with w*w == v, or nullopt when v is not a perfect square.
std::optional<u64> isqrt_exact(u128 v);

inline bool is_square(u128 v) { return isqrt_exact(v).has_value(); }

}  // namespace eulerbrick
