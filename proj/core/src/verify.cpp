#include "eulerbrick/verify.hpp"

#include <algorithm>
#include <iterator>

#include "eulerbrick/ppt.hpp"
#include "eulerbrick/scanner.hpp"

namespace eulerbrick {

namespace {

template <class T>
void set_differences(const std::vector<T>& expected, const std::vector<T>& actual, std::vector<T>& missing,
                     std::vector<T>& extra) {
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(), std::back_inserter(missing));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(), std::back_inserter(extra));
}

}  // namespace

TripleComparison compare_triples(u64 a_max) {
  if (a_max < 5) throw InvalidInput("compare_triples: a_max must be >= 5");
  TripleComparison cmp;
  cmp.a_max = a_max;
  // a = S + 2t^2 + l^2 >= S + 3
  cmp.s_max = std::max<u64>(2, (a_max - 3) & ~u64{1});

  std::vector<oracle::Triple> table;
  TripleStream stream(cmp.s_max);
  while (auto row = stream.next()) {
    const auto& tr = row->triple;
    if (tr.a <= a_max) table.push_back({tr.x, tr.y, tr.a});
  }
  std::sort(table.begin(), table.end());
  const auto classical = oracle::classical_ppt_enum(a_max);
  cmp.table_count = table.size();
  cmp.oracle_count = classical.size();
  set_differences(classical, table, cmp.missing_from_table, cmp.extra_in_table);
  return cmp;
}

std::optional<u64> first_primitive_face_S(u64 x, u64 y, u64 z) {
  std::optional<u64> best;
  const std::array<std::pair<u64, u64>, 3> faces{{{x, y}, {y, z}, {x, z}}};
  for (auto [p, q] : faces) {
    if (p % 2 == 0) std::swap(p, q);
    if (auto gen = locate(p, q)) {
      if (!best || gen->S < *best) best = gen->S;
    }
  }
  return best;
}

BrickComparison compare_bricks(u64 max_edge, std::optional<u64> s_max, unsigned workers) {
  BrickComparison cmp;
  cmp.max_edge = max_edge;
  for (const auto& b : oracle::brute_force_bricks(max_edge, workers)) {
    if (b.primitive()) cmp.oracle_primitive.push_back({b.x, b.y, b.z});
  }
  std::sort(cmp.oracle_primitive.begin(), cmp.oracle_primitive.end());

  if (s_max) {
    cmp.s_max = *s_max;
  } else {
    cmp.s_max = 2;
    for (const auto& e : cmp.oracle_primitive) {
      if (auto S = first_primitive_face_S(e[0], e[1], e[2])) cmp.s_max = std::max(cmp.s_max, *S);
    }
  }

  ScanOptions opt;
  opt.s_max = cmp.s_max;
  opt.max_edge = max_edge;
  opt.workers = workers;
  for (const auto& entry : scan(opt).entries) {
    if (entry.brick.primitive()) cmp.scan_primitive.push_back(entry.brick.sorted_edges());
  }
  std::sort(cmp.scan_primitive.begin(), cmp.scan_primitive.end());
  set_differences(cmp.oracle_primitive, cmp.scan_primitive, cmp.missing_from_scan, cmp.extra_in_scan);
  return cmp;
}

}  // namespace eulerbrick
