#include "eulerbrick/brick.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "eulerbrick/factor.hpp"
#include "eulerbrick/isqrt.hpp"
#include "eulerbrick/oracle.hpp"

namespace eulerbrick {

namespace {

bool by_z(const LegCandidate& a, const LegCandidate& b) {
  return std::tie(a.z, a.k, a.m, a.paired) < std::tie(b.z, b.k, b.m, b.paired);
}

void sort_unique(std::vector<LegCandidate>& v) {
  std::sort(v.begin(), v.end(), by_z);
  v.erase(std::unique(v.begin(), v.end(),
                      [](const LegCandidate& a, const LegCandidate& b) {
                        return a.z == b.z && a.k == b.k && a.m == b.m && a.paired == b.paired;
                      }),
          v.end());
}

// Paired leg of an odd truncated leg m = l * (m/l): ((m/l)^2 - l^2) / 2.
u64 paired_of_odd(u64 m, u64 l) {
  const u64 e = m / l;
  return narrow((square(e) - square(l)) / 2, "paired leg of odd truncated leg");
}

// Paired leg of an even truncated leg m = 2t(l + t): (m/(2t))^2 - t^2.
u64 paired_of_even(u64 m, u64 t) {
  const u64 e = m / (2 * t);
  return narrow(square(e) - square(t), "paired leg of even truncated leg");
}

void check_brick(const EulerBrick& br) {
  if (!oracle::satisfies_face_system(br.x, br.y, br.z, br.a, br.b, br.c)) {
    throw ValidationError("face system fails for " + format_brick_line(br));
  }
}

}  // namespace

bool EulerBrick::primitive() const { return std::gcd(std::gcd(x, y), z) == 1; }

std::array<u64, 3> EulerBrick::sorted_edges() const {
  std::array<u64, 3> e{x, y, z};
  std::sort(e.begin(), e.end());
  return e;
}

std::vector<LegCandidate> even_leg_candidates(u64 y) {
  if (y < 4 || y % 2 != 0) throw InvalidInput("even leg >= 4 expected, got " + std::to_string(y));
  std::vector<LegCandidate> out;
  for (u64 k1 : divisors(factorize(y))) {
    if (k1 % 4 != 0) continue;
    const u64 m1 = y / k1;
    if (m1 == 1) continue;
    if (m1 % 2 == 1) {
      for (const auto& g : representations_of_odd_leg(m1)) {
        const u64 m3 = paired_of_odd(m1, g.l);
        out.push_back({k1, m1, g, m3, mul_checked(k1, m3, "z = k1*m3")});
      }
    } else {
      for (const auto& g : representations_of_even_leg(m1)) {
        const u64 m3 = paired_of_even(m1, g.t);
        out.push_back({k1, m1, g, m3, mul_checked(k1, m3, "z = k1*m3")});
      }
    }
  }
  sort_unique(out);
  return out;
}

std::vector<LegCandidate> odd_leg_candidates(u64 x) {
  if (x < 3 || x % 2 == 0) throw InvalidInput("odd leg >= 3 expected, got " + std::to_string(x));
  std::vector<LegCandidate> out;
  for (u64 k2 : divisors(factorize(x))) {
    const u64 m2 = x / k2;
    if (m2 == 1) continue;
    for (const auto& g : representations_of_odd_leg(m2)) {
      const u64 m4 = paired_of_odd(m2, g.l);
      out.push_back({k2, m2, g, m4, mul_checked(k2, m4, "z = k2*m4")});
    }
  }
  sort_unique(out);
  return out;
}

std::vector<EulerBrick> build_bricks_for(const PrimitiveTriple& tr, std::optional<OrdinalIndex> source) {
  std::vector<EulerBrick> out;
  if (tr.y < 4) return out;
  const auto evens = even_leg_candidates(tr.y);
  if (evens.empty()) return out;
  const auto odds = odd_leg_candidates(tr.x);

  // Both lists are sorted by z: merge-walk for equal z.
  auto e = evens.begin();
  auto o = odds.begin();
  while (e != evens.end() && o != odds.end()) {
    if (e->z < o->z) {
      ++e;
    } else if (o->z < e->z) {
      ++o;
    } else {
      const u64 z = e->z;
      auto e_end = e;
      while (e_end != evens.end() && e_end->z == z) ++e_end;
      auto o_end = o;
      while (o_end != odds.end() && o_end->z == z) ++o_end;
      for (auto ei = e; ei != e_end; ++ei) {
        for (auto oi = o; oi != o_end; ++oi) {
          BrickMeta meta{ei->k, ei->m, ei->paired, oi->k, oi->m, oi->paired, 0, source};
          // Matching conditions, checked rather than assumed.
          if (std::gcd(meta.m3, tr.x) != meta.k2 || std::gcd(meta.m4, tr.y) != meta.k1 ||
              meta.m3 % meta.k2 != 0 || meta.m4 % meta.k1 != 0 || meta.m3 / meta.k2 != meta.m4 / meta.k1) {
            throw ValidationError("matching conditions fail at z=" + std::to_string(z) + " for triple (" +
                                  std::to_string(tr.x) + ", " + std::to_string(tr.y) + ")");
          }
          meta.q = meta.m3 / meta.k2;
          EulerBrick br;
          br.x = tr.x;
          br.y = tr.y;
          br.z = z;
          br.a = tr.a;
          const auto b = isqrt_exact(sum_squares(tr.y, z));
          const auto c = isqrt_exact(sum_squares(tr.x, z));
          if (!b || !c) throw ValidationError("candidate z=" + std::to_string(z) + " has a non-integral face");
          br.b = *b;
          br.c = *c;
          br.meta = meta;
          check_brick(br);
          if (br.z % 2 != 0) throw ValidationError("odd third edge z=" + std::to_string(z));
          out.push_back(br);
        }
      }
      e = e_end;
      o = o_end;
    }
  }
  return out;
}

EulerBrick alternative_brick(const EulerBrick& brick) {
  if (!brick.meta) throw InvalidInput("alternative_brick needs construction metadata");
  const BrickMeta& m = *brick.meta;
  EulerBrick alt;
  alt.x = mul_checked(m.q, brick.x, "q*x");
  alt.y = mul_checked(m.q, brick.y, "q*y");
  alt.z = mul_checked(m.m1, m.m2, "m1*m2");
  alt.a = mul_checked(m.q, brick.a, "q*a");
  const auto b = isqrt_exact(sum_squares(alt.y, alt.z));
  const auto c = isqrt_exact(sum_squares(alt.x, alt.z));
  if (!b || !c) throw ValidationError("alternative brick has a non-integral face");
  alt.b = *b;
  alt.c = *c;
  check_brick(alt);
  return alt;
}

FamilyBrick parametric_family(u64 r) {
  if (r == 0) throw InvalidInput("family parameter r must be >= 1");
  const u64 u = mul_checked(2, r) + 1;  // 2r + 1
  FamilyBrick f;
  f.r = r;
  f.legA = mul_checked(mul_checked(u, r + 1), u - 2, "legA");
  f.legB = mul_checked(mul_checked(r, u), u + 2, "legB");
  f.z = mul_checked(mul_checked(4, r), r + 1, "family z");
  const u64 r2x4 = mul_checked(4, mul_checked(r, r));
  f.diagA = mul_checked(r + 1, r2x4 + 1, "diagA");
  f.diagB = mul_checked(r, add_checked(r2x4, 8 * r + 5), "diagB");
  if (sum_squares(f.legA, f.z) != square(f.diagA) || sum_squares(f.legB, f.z) != square(f.diagB)) {
    throw ValidationError("family faces fail at r=" + std::to_string(r));
  }
  f.third_face_square = is_square(sum_squares(f.legA, f.legB));

  FamilyMatching mt;
  mt.k1 = r + 1;
  mt.m1 = mul_checked(u - 2, u);
  mt.m3 = 4 * r;
  mt.k2 = r;
  mt.m2 = mul_checked(u, u + 2);
  mt.m4 = 4 * (r + 1);
  // GCD(m3, x) = k2, GCD(m4, y) = k1, m3/k2 = m4/k1 = q
  if (std::gcd(mt.m3, f.legB) != mt.k2 || std::gcd(mt.m4, f.legA) != mt.k1 || mt.m3 % mt.k2 != 0 ||
      mt.m4 % mt.k1 != 0 || mt.m3 / mt.k2 != mt.m4 / mt.k1) {
    throw ValidationError("family matching conditions fail at r=" + std::to_string(r));
  }
  mt.q = mt.m3 / mt.k2;
  if (mul_checked(mul_checked(mt.k1, mt.k2), mt.q) != f.z) {
    throw ValidationError("family z != k1*k2*q at r=" + std::to_string(r));
  }
  f.matching = mt;
  return f;
}

FamilyBrick family_alternative(u64 r) {
  if (r == 0) throw InvalidInput("family parameter r must be >= 1");
  const u64 u = mul_checked(2, r) + 1;
  FamilyBrick f;
  f.r = r;
  f.legA = mul_checked(4, mul_checked(r + 1, u - 2), "alternative legA");
  f.legB = mul_checked(4, mul_checked(r, u + 2), "alternative legB");
  f.z = mul_checked(mul_checked(u - 2, u), u + 2, "alternative z");
  const auto da = isqrt_exact(sum_squares(f.legA, f.z));
  const auto db = isqrt_exact(sum_squares(f.legB, f.z));
  if (!da || !db) throw ValidationError("family alternative faces fail at r=" + std::to_string(r));
  f.diagA = *da;
  f.diagB = *db;
  f.third_face_square = is_square(sum_squares(f.legA, f.legB));
  return f;
}

std::string format_ordinal(const OrdinalIndex& idx) {
  return std::to_string(idx.N) + "." + std::to_string(idx.n);
}

std::string format_brick_line(const EulerBrick& brick, const std::vector<OrdinalIndex>& sources) {
  std::ostringstream os;
  os << "x=" << brick.x << " y=" << brick.y << " z=" << brick.z << " a=" << brick.a << " b=" << brick.b
     << " c=" << brick.c << " primitive=" << (brick.primitive() ? 1 : 0) << " source=";
  std::vector<OrdinalIndex> src = sources;
  if (src.empty() && brick.meta && brick.meta->source) src.push_back(*brick.meta->source);
  if (src.empty()) {
    os << '-';
  } else {
    for (std::size_t i = 0; i < src.size(); ++i) os << (i ? "," : "") << format_ordinal(src[i]);
  }
  auto field = [&](const char* name, u64 v) {
    os << ' ' << name << '=';
    if (brick.meta) {
      os << v;
    } else {
      os << '-';
    }
  };
  const BrickMeta m = brick.meta.value_or(BrickMeta{});
  field("k1", m.k1);
  field("m1", m.m1);
  field("m3", m.m3);
  field("k2", m.k2);
  field("m2", m.m2);
  field("m4", m.m4);
  field("q", m.q);
  return os.str();
}

namespace {

u64 parse_u64(std::string_view s, std::string_view what) {
  u64 v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidInput("bad integer for " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

OrdinalIndex parse_ordinal(std::string_view s) {
  const auto dot = s.find('.');
  if (dot == std::string_view::npos) throw InvalidInput("bad source row '" + std::string(s) + "'");
  return {parse_u64(s.substr(0, dot), "source N"), parse_u64(s.substr(dot + 1), "source n")};
}

}  // namespace

ParsedBrickLine parse_brick_line(const std::string& line) {
  static constexpr std::array<std::string_view, 15> kFields{"x",      "y",  "z",  "a",  "b",  "c",  "primitive", "source",
                                                            "k1",     "m1", "m3", "k2", "m2", "m4", "q"};
  std::istringstream is(line);
  std::array<std::string, 15> values;
  std::string token;
  std::size_t i = 0;
  while (is >> token) {
    if (i == kFields.size()) throw InvalidInput("trailing field in brick line: " + token);
    const auto eq = token.find('=');
    if (eq == std::string::npos || std::string_view(token).substr(0, eq) != kFields[i]) {
      throw InvalidInput("expected field '" + std::string(kFields[i]) + "' in brick line, got '" + token + "'");
    }
    values[i++] = token.substr(eq + 1);
  }
  if (i != kFields.size()) throw InvalidInput("brick line has " + std::to_string(i) + " fields, expected 15");

  ParsedBrickLine out;
  EulerBrick& br = out.brick;
  br.x = parse_u64(values[0], "x");
  br.y = parse_u64(values[1], "y");
  br.z = parse_u64(values[2], "z");
  br.a = parse_u64(values[3], "a");
  br.b = parse_u64(values[4], "b");
  br.c = parse_u64(values[5], "c");
  const u64 primitive = parse_u64(values[6], "primitive");
  if (values[7] != "-") {
    std::string_view rest = values[7];
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      out.sources.push_back(parse_ordinal(rest.substr(0, comma)));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
  }
  const bool has_meta = values[8] != "-";
  for (std::size_t f = 9; f < 15; ++f) {
    if ((values[f] != "-") != has_meta) throw InvalidInput("brick line mixes present and absent meta fields");
  }
  if (has_meta) {
    BrickMeta m;
    m.k1 = parse_u64(values[8], "k1");
    m.m1 = parse_u64(values[9], "m1");
    m.m3 = parse_u64(values[10], "m3");
    m.k2 = parse_u64(values[11], "k2");
    m.m2 = parse_u64(values[12], "m2");
    m.m4 = parse_u64(values[13], "m4");
    m.q = parse_u64(values[14], "q");
    if (!out.sources.empty()) m.source = out.sources.front();
    br.meta = m;
  }
  if (primitive != (br.primitive() ? 1U : 0U)) throw InvalidInput("primitive flag disagrees with the edges");
  return out;
}

}  // namespace eulerbrick
