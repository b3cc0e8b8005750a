#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "eulerbrick/scanner.hpp"

using namespace eulerbrick;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("eulerbrick_scan_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string checkpoint_text(const ScanCheckpoint& c) {
  std::ostringstream os;
  write_checkpoint(os, c);
  return os.str();
}

}  // namespace

TEST(SpaceDiagonal, KnownBricks) {
  const auto r1 = space_diagonal_check(EulerBrick{117, 44, 240, 125, 244, 267, std::nullopt});
  EXPECT_EQ(r1.diagonal_square, 73225U);
  EXPECT_FALSE(r1.d);
  const auto r2 = space_diagonal_check(EulerBrick{275, 252, 240, 373, 348, 365, std::nullopt});
  EXPECT_EQ(r2.diagonal_square, 196729U);
  EXPECT_FALSE(r2.d);
}

TEST(SpaceDiagonal, DetectsIntegralDiagonal) {
  // 3-4-12 is not a brick; faces left at zero so only the detector runs.
  const auto r = space_diagonal_check(EulerBrick{3, 4, 12, 0, 0, 0, std::nullopt});
  EXPECT_EQ(r.diagonal_square, 169U);
  ASSERT_TRUE(r.d);
  EXPECT_EQ(*r.d, 13U);
  EXPECT_THROW(space_diagonal_check(EulerBrick{117, 44, 240, 125, 244, 268, std::nullopt}), ValidationError);
}

TEST(Scan, Tiny) {
  ScanOptions o;
  o.s_max = 2;
  const auto rep = scan(o);
  EXPECT_TRUE(rep.complete);
  EXPECT_EQ(rep.rows_processed, 1U);
  EXPECT_EQ(rep.bricks_found(), 0U);
  EXPECT_THROW(scan(ScanOptions{3}), InvalidInput);
}

TEST(Scan, FindsMinimalBrick) {
  ScanOptions o;
  o.s_max = 36;
  const auto rep = scan(o);
  ASSERT_EQ(rep.bricks_found(), 1U);
  EXPECT_EQ(rep.entries[0].brick.sorted_edges(), (std::array<u64, 3>{44, 117, 240}));
  EXPECT_EQ(rep.entries[0].sources, (std::vector<OrdinalIndex>{{18, 1}}));
  EXPECT_EQ(rep.perfect_cuboids_found(), 0U);
  EXPECT_EQ(rep.primitive_bricks_found, 1U);
}

TEST(Scan, DeterministicAcrossWorkersAndStrides) {
  ScanOptions o;
  o.s_max = 600;
  o.max_edge = 5000;
  const std::string one = format_report(scan(o));
  o.workers = 4;
  EXPECT_EQ(format_report(scan(o)), one);
  o.stride = 34;
  EXPECT_EQ(format_report(scan(o)), one);
}

TEST(Scan, HaltAndResumeMatchesUninterrupted) {
  TempDir dir;
  const fs::path ckpt = dir.path / "scan.ckpt";
  ScanOptions o;
  o.s_max = 500;
  o.workers = 2;
  const std::string full = format_report(scan(o));

  o.checkpoint_path = ckpt;
  o.halt_after_S = 250;
  const auto partial = scan(o);
  EXPECT_FALSE(partial.complete);
  EXPECT_EQ(partial.last_completed_S, 300U);

  const auto loaded = load_checkpoint(ckpt);
  EXPECT_EQ(loaded.last_completed_S, 300U);
  o.halt_after_S.reset();
  const auto resumed = scan(o, loaded);
  EXPECT_TRUE(resumed.complete);
  EXPECT_EQ(format_report(resumed), full);
}

TEST(Scan, ResumeWithLargerBound) {
  ScanCheckpoint captured;
  ScanOptions o;
  o.s_max = 200;
  o.on_commit = [&](const ScanCheckpoint& c) { captured = c; };
  scan(o);
  EXPECT_EQ(captured.last_completed_S, 200U);
  o.on_commit = nullptr;
  o.s_max = 400;
  const std::string extended = format_report(scan(o, captured));
  EXPECT_EQ(extended, format_report(scan(o)));
}

TEST(Scan, ResumeRejectsMismatch) {
  ScanCheckpoint captured;
  ScanOptions o;
  o.s_max = 200;
  o.max_edge = 1000;
  o.on_commit = [&](const ScanCheckpoint& c) { captured = c; };
  scan(o);
  o.max_edge = 2000;
  EXPECT_THROW(scan(o, captured), CheckpointError);
  o.max_edge = 1000;
  o.s_max = 100;
  EXPECT_THROW(scan(o, captured), CheckpointError);
}

TEST(Checkpoint, RoundTripAndCorruption) {
  ScanCheckpoint captured;
  ScanOptions o;
  o.s_max = 400;
  o.on_commit = [&](const ScanCheckpoint& c) { captured = c; };
  scan(o);
  const std::string text = checkpoint_text(captured);
  std::istringstream in(text);
  const auto back = read_checkpoint(in);
  EXPECT_EQ(checkpoint_text(back), text);

  auto corrupt = [&](const std::string& from, const std::string& to) {
    std::string t = text;
    const auto pos = t.find(from);
    EXPECT_NE(pos, std::string::npos) << from;
    t.replace(pos, from.size(), to);
    std::istringstream is(t);
    EXPECT_THROW(read_checkpoint(is), CheckpointError) << from << " -> " << to;
  };
  corrupt("bricks_found=", "bricks_found=9");
  corrupt("brick_digest=", "brick_digest=0");
  corrupt("x=117", "x=118");
  corrupt("format_version=1", "format_version=2");
  corrupt("last_completed_S=", "last_completed_S=x");
  {
    std::istringstream empty("");
    EXPECT_THROW(read_checkpoint(empty), CheckpointError);
  }
  EXPECT_THROW(load_checkpoint("/nonexistent/eulerbrick.ckpt"), CheckpointError);
}

TEST(Report, SummaryBlock) {
  ScanOptions o;
  o.s_max = 36;
  const std::string text = format_report(scan(o));
  EXPECT_EQ(text.rfind("# eulerbrick scan report format_version=1\n", 0), 0U);
  EXPECT_NE(text.find("bricks_found=1\n"), std::string::npos);
  EXPECT_NE(text.find("perfect_cuboids_found=0\n"), std::string::npos);
  EXPECT_NE(text.find("complete=1\n"), std::string::npos);
}
