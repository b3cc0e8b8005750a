#pragma once

// Euler brick construction from one row of the ordered triple table.
//
// The even leg is truncated as y = k1*m1 (4 | k1) and the odd leg as
// x = k2*m2 (k2 odd). Each truncated leg belongs to primitive triples
// (m1, m3) and (m2, m4), proposing third edges z = k1*m3 and z = k2*m4.
// A brick exists where the two candidate lists meet; then
//   m3 = k2*q,  m4 = k1*q,  z = k1*k2*q.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "eulerbrick/arith.hpp"
#include "eulerbrick/ppt.hpp"

namespace eulerbrick {

struct LegCandidate {
  u64 k = 0;       // truncation coefficient
  u64 m = 0;       // truncated leg, never 1
  GeneratingSquare sub_gen;  // representation of m as a leg
  u64 paired = 0;  // other leg of the primitive triple through m
  u64 z = 0;       // k * paired

  friend bool operator==(const LegCandidate&, const LegCandidate&) = default;
};

struct BrickMeta {
  u64 k1 = 0, m1 = 0, m3 = 0;
  u64 k2 = 0, m2 = 0, m4 = 0;
  u64 q = 0;
  std::optional<OrdinalIndex> source;

  friend bool operator==(const BrickMeta&, const BrickMeta&) = default;
};

struct EulerBrick {
  u64 x = 0, y = 0, z = 0;  // edges
  u64 a = 0, b = 0, c = 0;  // face diagonals: a over (x,y), b over (y,z), c over (x,z)
  std::optional<BrickMeta> meta;

  bool primitive() const;
  /// Edges in increasing order; the identity of a brick.
  std::array<u64, 3> sorted_edges() const;

  friend bool operator==(const EulerBrick&, const EulerBrick&) = default;
};

std::vector<LegCandidate> even_leg_candidates(u64 y);
std::vector<LegCandidate> odd_leg_candidates(u64 x);

/// Bricks whose first face is the given triple, ascending z. Empty when none exists.
std::vector<EulerBrick> build_bricks_for(const PrimitiveTriple& tr,
                                         std::optional<OrdinalIndex> source = std::nullopt);

/// (q*x, q*y, m1*m2) with diagonals (q*a, b*, c*). Requires meta.
EulerBrick alternative_brick(const EulerBrick& brick);

/// Truncation data of the (2r+1) family.
struct FamilyMatching {
  u64 k1 = 0, m1 = 0, m3 = 0;
  u64 k2 = 0, m2 = 0, m4 = 0;
  u64 q = 0;
};

/// Two faces are integral by construction; the third face (legA, legB) is reported, not assumed.
struct FamilyBrick {
  u64 r = 0;
  u64 legA = 0;
  u64 legB = 0;
  u64 z = 0;
  u64 diagA = 0;
  u64 diagB = 0;
  bool third_face_square = false;
  std::optional<FamilyMatching> matching;
};

/// legA = (2r+1)(r+1)(2r-1), legB = r(2r+1)(2r+3), z = 4r(r+1).
FamilyBrick parametric_family(u64 r);

/// legA = 4(r+1)(2r-1), legB = 4r(2r+3), z = (2r-1)(2r+1)(2r+3).
FamilyBrick family_alternative(u64 r);

// Line format, fields in fixed order:
//   x= y= z= a= b= c= primitive= source= k1= m1= m3= k2= m2= m4= q=
// source is a comma separated list of N.n; absent values are written as '-'.
std::string format_brick_line(const EulerBrick& brick, const std::vector<OrdinalIndex>& sources = {});

struct ParsedBrickLine {
  EulerBrick brick;
  std::vector<OrdinalIndex> sources;
};

/// Inverse of format_brick_line. Throws InvalidInput on any malformed field.
ParsedBrickLine parse_brick_line(const std::string& line);

std::string format_ordinal(const OrdinalIndex& idx);

}  // namespace eulerbrick
