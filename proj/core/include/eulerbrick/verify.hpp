#pragma once

// Cross-checks of the constructive routes against the brute-force oracle.

#include <array>
#include <optional>
#include <vector>

#include "eulerbrick/arith.hpp"
#include "eulerbrick/oracle.hpp"

namespace eulerbrick {

struct TripleComparison {
  u64 a_max = 0;
  u64 s_max = 0;  // generating-square bound used to saturate the table
  std::vector<oracle::Triple> missing_from_table;  // oracle only
  std::vector<oracle::Triple> extra_in_table;      // table only
  std::size_t table_count = 0;
  std::size_t oracle_count = 0;

  bool equal() const { return missing_from_table.empty() && extra_in_table.empty(); }
};

/// Ordered table (saturated for hypotenuse <= a_max) versus classical_ppt_enum(a_max).
TripleComparison compare_triples(u64 a_max);

using EdgeSet = std::vector<std::array<u64, 3>>;

struct BrickComparison {
  u64 max_edge = 0;
  u64 s_max = 0;
  EdgeSet oracle_primitive;
  EdgeSet scan_primitive;
  EdgeSet missing_from_scan;  // found by brute force only: the construction missed them
  EdgeSet extra_in_scan;      // found by the scan only: would mean an oracle defect

  bool equal() const { return missing_from_scan.empty() && extra_in_scan.empty(); }
};

/// Smallest generating-square side among the primitive faces of a brick, if any face is primitive.
std::optional<u64> first_primitive_face_S(u64 x, u64 y, u64 z);

/// Primitive bricks of scan(s_max, max_edge) versus brute_force_bricks(max_edge).
/// Without s_max the bound is derived from the oracle bricks' primitive faces.
BrickComparison compare_bricks(u64 max_edge, std::optional<u64> s_max = std::nullopt, unsigned workers = 1);

}  // namespace eulerbrick
