#include "eulerbrick/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>

namespace eulerbrick::oracle {

bool Brick::primitive() const { return std::gcd(std::gcd(x, y), z) == 1; }

bool satisfies_face_system(u64 x, u64 y, u64 z, u64 a, u64 b, u64 c) {
  return sum_squares(x, y) == square(a) && sum_squares(y, z) == square(b) && sum_squares(x, z) == square(c);
}

std::optional<std::array<u64, 3>> face_diagonals(u64 x, u64 y, u64 z) {
  const auto a = isqrt_exact(sum_squares(x, y));
  if (!a) return std::nullopt;
  const auto b = isqrt_exact(sum_squares(y, z));
  if (!b) return std::nullopt;
  const auto c = isqrt_exact(sum_squares(x, z));
  if (!c) return std::nullopt;
  return std::array<u64, 3>{*a, *b, *c};
}

std::vector<Triple> classical_ppt_enum(u64 a_max) {
  std::vector<Triple> out;
  for (u64 m = 2; m * m + 1 <= a_max; ++m) {
    for (u64 n = (m % 2 == 0) ? 1 : 2; n < m; n += 2) {
      const u64 a = m * m + n * n;
      if (a > a_max) break;
      if (std::gcd(m, n) != 1) continue;
      out.push_back({m * m - n * n, 2 * m * n, a});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Pair-driven scan for all x in [x_begin, x_end): partners of x are the y > x
// with x^2 + y^2 square; a brick is two partners y < z that pair with each other.
std::vector<Brick> scan_range(u64 x_begin, u64 x_end, u64 max_edge) {
  std::vector<Brick> out;
  std::vector<std::pair<u64, u64>> partners;  // (y, diagonal)
  for (u64 x = x_begin; x < x_end; ++x) {
    partners.clear();
    for (u64 y = x + 1; y <= max_edge; ++y) {
      if (auto d = isqrt_exact(sum_squares(x, y))) partners.emplace_back(y, *d);
    }
    for (std::size_t i = 0; i < partners.size(); ++i) {
      for (std::size_t j = i + 1; j < partners.size(); ++j) {
        const auto [y, a] = partners[i];
        const auto [z, c] = partners[j];
        if (auto b = isqrt_exact(sum_squares(y, z))) out.push_back({x, y, z, a, *b, c});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Brick> brute_force_bricks(u64 max_edge, unsigned workers) {
  workers = std::max(1U, workers);
  std::vector<std::vector<Brick>> parts(workers);
  // Interleaved x ranges balance the triangular workload.
  constexpr u64 kChunk = 16;
  auto run = [&](unsigned w) {
    for (u64 begin = 1 + w * kChunk; begin <= max_edge; begin += workers * kChunk) {
      auto found = scan_range(begin, std::min(begin + kChunk, max_edge + 1), max_edge);
      parts[w].insert(parts[w].end(), found.begin(), found.end());
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<Brick> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

StirlingTable::StirlingTable(unsigned max_n, unsigned max_k)
    : max_n_(max_n), max_k_(std::min(max_k, max_n)), rows_(max_n + 1) {
  rows_[0] = {1};
  for (unsigned n = 1; n <= max_n; ++n) {
    const unsigned width = std::min(n, max_k_);
    rows_[n].assign(width + 1, 0);
    for (unsigned k = 1; k <= width; ++k) {
      const u128 prev_k = k < rows_[n - 1].size() ? rows_[n - 1][k] : 0;
      const u128 term = static_cast<u128>(k) * prev_k;
      if (prev_k != 0 && term / prev_k != k) throw OverflowError("Stirling table overflow");
      const u128 sum = term + rows_[n - 1][k - 1];
      if (sum < term) throw OverflowError("Stirling table overflow");
      rows_[n][k] = sum;
    }
  }
}

u128 StirlingTable::at(unsigned n, unsigned k) const {
  if (k > n) return 0;
  if (n > max_n_ || k > max_k_) throw InvalidInput("Stirling cell outside the table");
  return rows_[n][k];
}

u64 stirling_count_check(unsigned n) {
  if (n == 0 || n > 64) throw InvalidInput("stirling_count_check: n must be in 1..64");
  StirlingTable table(n, 2);
  const u128 total = table.at(n, 1) + table.at(n, 2);
  const u128 expected = static_cast<u128>(1) << (n - 1);
  if (total != expected) {
    throw ValidationError("S(n,1) + S(n,2) != 2^(n-1) for n = " + std::to_string(n));
  }
  return static_cast<u64>(total);
}

}  // namespace eulerbrick::oracle
