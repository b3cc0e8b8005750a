#include "eulerbrick/ppt.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "eulerbrick/factor.hpp"
#include "eulerbrick/isqrt.hpp"

namespace eulerbrick {

namespace {

void require_even_side(u64 S) {
  if (S < 2 || S % 2 != 0) {
    throw InvalidInput("generating square side must be even and >= 2, got " + std::to_string(S));
  }
}

bool by_side(const GeneratingSquare& a, const GeneratingSquare& b) { return a.S < b.S; }

}  // namespace

GeneratingSquare GeneratingSquare::from_tl(u64 t, u64 l) {
  GeneratingSquare g{mul_checked(2, mul_checked(t, l, "S = 2tl"), "S = 2tl"), t, l};
  g.validate();
  return g;
}

bool GeneratingSquare::valid() const noexcept {
  if (t == 0 || l == 0 || l % 2 == 0 || std::gcd(t, l) != 1) return false;
  u64 tl = 0;
  if (__builtin_mul_overflow(t, l, &tl) || tl > S / 2) return false;
  return S == 2 * tl;
}

void GeneratingSquare::validate() const {
  if (!valid()) {
    throw InvalidInput("not a generating square: S=" + std::to_string(S) + " t=" + std::to_string(t) +
                       " l=" + std::to_string(l));
  }
}

bool MnParams::valid() const noexcept {
  return n >= 1 && m > n && std::gcd(m, n) == 1 && (m % 2) != (n % 2);
}

void MnParams::validate() const {
  if (!valid()) {
    throw InvalidInput("m, n must satisfy m > n >= 1, gcd = 1, opposite parity; got m=" + std::to_string(m) +
                       " n=" + std::to_string(n));
  }
}

std::vector<GeneratingSquare> partitions_of(u64 S) {
  require_even_side(S);
  const u64 half = S / 2;
  Factorization f = factorize(half);
  // l collects whole odd prime powers; t keeps the rest (including all of 2^(a0-1)).
  std::vector<u64> odd_parts{1};
  for (const auto& [p, e] : f.factors) {
    if (p == 2) continue;
    u64 pk = 1;
    for (unsigned i = 0; i < e; ++i) pk *= p;
    const std::size_t n = odd_parts.size();
    for (std::size_t j = 0; j < n; ++j) odd_parts.push_back(odd_parts[j] * pk);
  }
  std::vector<GeneratingSquare> out;
  out.reserve(odd_parts.size());
  for (u64 l : odd_parts) out.push_back({S, half / l, l});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.t < b.t; });
  return out;
}

u64 count_L(u64 S) {
  require_even_side(S);
  return u64{1} << factorize(S / 2).distinct_odd();
}

PrimitiveTriple triple_from(const GeneratingSquare& gen) {
  gen.validate();
  const u64 l2 = mul_checked(gen.l, gen.l, "l^2");
  const u64 t2x2 = mul_checked(2, mul_checked(gen.t, gen.t, "t^2"), "2t^2");
  PrimitiveTriple tr;
  tr.x = add_checked(gen.S, l2, "x = S + l^2");
  tr.y = add_checked(gen.S, t2x2, "y = S + 2t^2");
  tr.a = add_checked(tr.y, l2, "a = S + 2t^2 + l^2");
  tr.gen = gen;
  return tr;
}

PrimitiveTriple triple_from_mn(const MnParams& mn) {
  mn.validate();
  const u64 m2 = mul_checked(mn.m, mn.m, "m^2");
  const u64 n2 = mul_checked(mn.n, mn.n, "n^2");
  PrimitiveTriple tr;
  tr.x = m2 - n2;
  tr.y = mul_checked(2, mul_checked(mn.m, mn.n, "mn"), "2mn");
  tr.a = add_checked(m2, n2, "m^2 + n^2");
  tr.gen = from_mn(mn);
  return tr;
}

MnParams to_mn(const GeneratingSquare& gen) {
  gen.validate();
  return {add_checked(gen.l, gen.t, "m = l + t"), gen.t};
}

GeneratingSquare from_mn(const MnParams& mn) {
  mn.validate();
  return GeneratingSquare::from_tl(mn.n, mn.m - mn.n);
}

OrdinalIndex ordinal_of(const GeneratingSquare& gen) {
  gen.validate();
  const auto block = partitions_of(gen.S);
  const auto it = std::find(block.begin(), block.end(), gen);
  return {gen.S / 2, static_cast<u64>(it - block.begin()) + 1};
}

std::optional<GeneratingSquare> locate(u64 x, u64 y) {
  if (x % 2 == 0 || y % 2 != 0 || x == 0 || y == 0 || std::gcd(x, y) != 1) return std::nullopt;
  const auto a = isqrt_exact(sum_squares(x, y));
  if (!a) return std::nullopt;
  // m^2 = (a + x)/2, n^2 = (a - x)/2
  const auto m = isqrt_exact((static_cast<u128>(*a) + x) / 2);
  const auto n = isqrt_exact((*a - x) / 2);
  if (!m || !n || *m <= *n) return std::nullopt;
  return GeneratingSquare::from_tl(*n, *m - *n);
}

std::vector<GeneratingSquare> representations_of_even_leg(u64 y) {
  if (y % 2 != 0 || y == 0) throw InvalidInput("even leg expected, got " + std::to_string(y));
  std::vector<GeneratingSquare> out;
  if (y < 4) return out;
  // y/2 = t*m with m = l + t > t, gcd(t, m) = 1 and opposite parity (l odd).
  const u64 half = y / 2;
  for (u64 t : unitary_divisors(factorize(half))) {
    const u64 m = half / t;
    if (t >= m || (m - t) % 2 == 0) continue;
    const u64 l = m - t;
    out.push_back({2 * t * l, t, l});
  }
  std::sort(out.begin(), out.end(), by_side);
  return out;
}

std::vector<GeneratingSquare> representations_of_odd_leg(u64 x) {
  if (x % 2 == 0) throw InvalidInput("odd leg expected, got " + std::to_string(x));
  std::vector<GeneratingSquare> out;
  if (x < 3) return out;
  // x = l * e with e = l + 2t, l < e, gcd(l, e) = 1 (equivalent to gcd(l, t) = 1 for odd l).
  for (u64 l : unitary_divisors(factorize(x))) {
    const u64 e = x / l;
    if (l >= e) continue;
    const u64 t = (e - l) / 2;
    out.push_back({2 * t * l, t, l});
  }
  std::sort(out.begin(), out.end(), by_side);
  return out;
}

TripleStream::TripleStream(u64 S_max, u64 S_first) : S_max_(S_max), S_(S_first) {
  require_even_side(S_max);
  require_even_side(S_first);
}

std::optional<OrderedTriple> TripleStream::next() {
  while (pos_ == block_.size()) {
    if (S_ > S_max_) return std::nullopt;
    block_ = partitions_of(S_);
    pos_ = 0;
    S_ += 2;
  }
  const GeneratingSquare& gen = block_[pos_++];
  return OrderedTriple{{gen.S / 2, pos_}, triple_from(gen)};
}

std::vector<OrderedTriple> enumerate_ordered(u64 S_max) {
  std::vector<OrderedTriple> out;
  TripleStream stream(S_max);
  while (auto row = stream.next()) out.push_back(*row);
  return out;
}

}  // namespace eulerbrick
