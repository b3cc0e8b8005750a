#include "eulerbrick/factor.hpp"

#include <algorithm>

namespace eulerbrick {

std::size_t Factorization::distinct_odd() const {
  return static_cast<std::size_t>(
      std::count_if(factors.begin(), factors.end(), [](const PrimePower& p) { return p.prime != 2; }));
}

u64 Factorization::product() const {
  u64 v = 1;
  for (const auto& [p, e] : factors)
    for (unsigned i = 0; i < e; ++i) v = mul_checked(v, p, "factorization product");
  return v;
}

Factorization factorize(u64 value) {
  if (value == 0) throw InvalidInput("factorize: value must be positive");
  Factorization f;
  f.value = value;
  u64 rest = value;
  auto take = [&](u64 p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e != 0) f.factors.push_back({p, e});
  };
  take(2);
  take(3);
  // 6k +- 1 wheel
  for (u64 p = 5; p <= rest / p; p += 6) {
    take(p);
    take(p + 2);
  }
  if (rest > 1) f.factors.push_back({rest, 1});
  return f;
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t n = out.size();
    u64 pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < n; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> unitary_divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : f.factors) {
    u64 pk = 1;
    for (unsigned i = 0; i < e; ++i) pk *= p;
    const std::size_t n = out.size();
    for (std::size_t j = 0; j < n; ++j) out.push_back(out[j] * pk);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eulerbrick
