#include <gtest/gtest.h>

#include <fstream>
#include <numeric>
#include <sstream>

#include "eulerbrick/gnomon.hpp"

using namespace eulerbrick;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

u64 term_sum(const GnomonDescriptor& g) {
  const auto t = g.terms();
  return std::accumulate(t.begin(), t.end(), u64{0});
}

PrimitiveTriple row(u64 t, u64 l) { return triple_from(GeneratingSquare::from_tl(t, l)); }

}  // namespace

TEST(ConnectedGnomons, SmallestTriple) {
  const auto g = connected_gnomons(row(1, 1));
  EXPECT_EQ(g.of_even_leg.first, 7U);
  EXPECT_EQ(g.of_even_leg.thickness, 2U);
  EXPECT_EQ(g.of_even_leg.terms(), (std::vector<u64>{7, 9}));
  EXPECT_EQ(term_sum(g.of_even_leg), 16U);
  EXPECT_EQ(g.of_odd_leg.first, 9U);
  EXPECT_EQ(g.of_odd_leg.terms(), (std::vector<u64>{9}));
  EXPECT_EQ(g.of_odd_leg.last, 9U);
  EXPECT_EQ(g.of_even_leg.last, 9U);
}

TEST(ConnectedGnomons, MinimalBrickRow) {
  const auto g = connected_gnomons(row(2, 9));
  const auto& gx = g.of_odd_leg;
  const auto& gy = g.of_even_leg;
  EXPECT_EQ(gx.first, 89U);
  EXPECT_EQ(gx.thickness, 81U);
  EXPECT_EQ(gx.middle, HalfInteger::of(169));
  EXPECT_EQ(gx.last, 249U);
  EXPECT_EQ(gx.base, 44U);
  EXPECT_EQ(gy.first, 235U);
  EXPECT_EQ(gy.thickness, 8U);
  EXPECT_EQ(gy.middle, HalfInteger::of(242));
  EXPECT_EQ(gy.last, 249U);
  EXPECT_EQ(gy.base, 117U);
  EXPECT_TRUE(is_tail_of(gy, gx));
}

TEST(ConnectedGnomons, Row6_1) {
  const auto g = connected_gnomons(row(2, 3));  // (21, 20, 29)
  EXPECT_EQ(g.of_odd_leg.first, 41U);
  EXPECT_EQ(g.of_odd_leg.thickness, 9U);
  EXPECT_EQ(g.of_odd_leg.last, 57U);
  EXPECT_EQ(term_sum(g.of_odd_leg), 21U * 21U);
  EXPECT_EQ(g.of_even_leg.first, 43U);
  EXPECT_EQ(g.of_even_leg.thickness, 8U);
  EXPECT_EQ(g.of_even_leg.last, 57U);
  EXPECT_EQ(term_sum(g.of_even_leg), 20U * 20U);
}

TEST(ConnectedGnomons, MinimalBrickDump) {
  const auto g = connected_gnomons(row(2, 9));
  EXPECT_EQ(format_terms(g.of_odd_leg), slurp(EULERBRICK_GOLDEN_DIR "/minimal_brick_gx.txt"));
  EXPECT_EQ(format_terms(g.of_even_leg), slurp(EULERBRICK_GOLDEN_DIR "/minimal_brick_gy.txt"));
}

TEST(MapLeg, Examples) {
  const auto g11 = GeneratingSquare::from_tl(1, 1);
  EXPECT_EQ(map_leg(g11, LegDirection::x_to_y), 4U);
  const auto g29 = GeneratingSquare::from_tl(2, 9);
  EXPECT_EQ(map_leg(g29, LegDirection::x_to_y), 44U);
  EXPECT_EQ(map_leg(g29, LegDirection::y_to_x), 117U);
  const auto g711 = GeneratingSquare::from_tl(7, 11);
  EXPECT_EQ(map_leg(g711, LegDirection::y_to_x), 275U);
  EXPECT_EQ(map_leg(g711, LegDirection::x_to_y), 252U);
  EXPECT_EQ(square(252) + square(275), square(373));
}

TEST(MapLeg, RoundTripThroughOddLegRepresentations) {
  for (const auto& r : enumerate_ordered(400)) {
    const auto& gen = r.triple.gen;
    const u64 x = map_leg(gen, LegDirection::y_to_x);
    EXPECT_EQ(x, r.triple.x);
    EXPECT_EQ(map_leg(gen, LegDirection::x_to_y), r.triple.y);
    const auto reps = representations_of_odd_leg(x);
    EXPECT_NE(std::find(reps.begin(), reps.end(), gen), reps.end());
  }
}

TEST(TransformGnomon, MinimalBrickValues) {
  const auto gy = transform_gnomon(44 * 44, 4);
  EXPECT_EQ(gy.middle, HalfInteger::of(484));
  EXPECT_EQ(gy.base, 240U);
  const auto gx = transform_gnomon(117 * 117, 27);
  EXPECT_EQ(gx.middle, HalfInteger::of(507));
  EXPECT_EQ(gx.base, 240U);
  EXPECT_TRUE(is_head_of(gy, gx));
  EXPECT_EQ(format_terms(gx), slurp(EULERBRICK_GOLDEN_DIR "/minimal_brick_tx.txt"));
  EXPECT_EQ(format_terms(gy), slurp(EULERBRICK_GOLDEN_DIR "/minimal_brick_ty.txt"));
}

TEST(TransformGnomon, IdentityOnOriginal) {
  const auto g = transform_gnomon(16, 2);
  EXPECT_EQ(g.middle, HalfInteger::of(8));
  EXPECT_EQ(g.base, 3U);
  EXPECT_EQ(g, connected_gnomons(row(1, 1)).of_even_leg);
}

TEST(TransformGnomon, Failures) {
  EXPECT_THROW(transform_gnomon(16, 3), NotRepresentable);   // not a divisor
  EXPECT_THROW(transform_gnomon(16, 1), NotRepresentable);   // 16 - 1 odd
  EXPECT_THROW(transform_gnomon(16, 8), NotRepresentable);   // middle 2 < 8
  EXPECT_THROW(transform_gnomon(0, 1), InvalidInput);
  const auto full = transform_gnomon(16, 4);  // base 0: a full square
  EXPECT_TRUE(full.degenerate());
  EXPECT_EQ(full.terms(), (std::vector<u64>{1, 3, 5, 7}));
}

TEST(TransformGnomon, PythagoreanIdentityForAdmissibleThicknesses) {
  for (u64 area = 1; area <= 3000; ++area) {
    for (u64 T : admissible_thicknesses(area)) {
      const auto g = transform_gnomon(area, T);
      EXPECT_EQ(square(g.base + T) - square(g.base), area);
      EXPECT_EQ(g.area, area);
      EXPECT_EQ(g.first, g.middle.value() - T + 1);
      EXPECT_EQ(g.last, g.middle.value() + T - 1);
      EXPECT_EQ(term_sum(g), area);
    }
  }
}

TEST(ScaleGnomon, Examples) {
  const auto gx = connected_gnomons(row(1, 1)).of_odd_leg;
  const auto s2 = scale_gnomon(gx, 2);
  EXPECT_EQ(s2.area, 36U);
  EXPECT_EQ(s2.thickness, 2U);
  EXPECT_EQ(s2.base, 8U);
  EXPECT_EQ(s2.terms(), (std::vector<u64>{17, 19}));

  const auto gy = connected_gnomons(row(1, 1)).of_even_leg;
  const auto s3 = scale_gnomon(gy, 3);
  EXPECT_EQ(s3.area, 144U);
  EXPECT_EQ(s3.thickness, 6U);
  EXPECT_EQ(s3.base, 9U);
  EXPECT_EQ(s3.outer_side(), 15U);

  const auto big = scale_gnomon(connected_gnomons(row(2, 9)).of_odd_leg, 2);
  EXPECT_EQ(big.thickness, 162U);
  EXPECT_EQ(big.base, 88U);
  EXPECT_EQ(big.last, 2U * 250U - 1U);
}

TEST(ScaleGnomon, Laws) {
  for (const auto& r : enumerate_ordered(120)) {
    for (const auto& g : {connected_gnomons(r.triple).of_odd_leg, connected_gnomons(r.triple).of_even_leg}) {
      EXPECT_EQ(scale_gnomon(g, 1), g);
      for (u64 j = 1; j <= 4; ++j) {
        for (u64 k = 1; k <= 4; ++k) {
          EXPECT_EQ(scale_gnomon(scale_gnomon(g, j), k), scale_gnomon(g, j * k));
        }
      }
      EXPECT_EQ(scale_gnomon(g, 3), transform_gnomon(9 * g.area, 3 * g.thickness));
    }
  }
}
