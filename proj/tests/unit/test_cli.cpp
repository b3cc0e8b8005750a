#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using eulerbrick::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, TableMatchesGolden) {
  const auto r = call({"table", "--s-max", "100", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, slurp(EULERBRICK_GOLDEN_DIR "/ordered_table.csv"));
}

TEST(Cli, BrickCommand) {
  const auto r = call({"brick", "--s", "36", "--t", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("117"), std::string::npos);
  EXPECT_NE(r.out.find("2340"), std::string::npos);
  const auto s = call({"brick", "--m", "11", "--n", "2", "--format", "structured-text"});
  EXPECT_EQ(s.code, 0) << s.err;
  EXPECT_NE(s.out.find("x=117 y=44 z=240 a=125 b=244 c=267 primitive=1 source=18.1"), std::string::npos) << s.out;
}

TEST(Cli, TripleAndReps) {
  EXPECT_EQ(call({"triple", "--s", "154", "--t", "7"}).code, 0);
  const auto r = call({"reps", "--even-leg", "44"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("117"), std::string::npos);
  EXPECT_EQ(call({"reps", "--even-leg", "44", "--odd-leg", "3"}).code, 2);
}

TEST(Cli, GnomonTransform) {
  const auto r = call({"gnomon", "--area", "1936", "--thickness", "4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("481"), std::string::npos);
  EXPECT_EQ(call({"gnomon", "--area", "16", "--thickness", "3"}).code, 2);
}

TEST(Cli, Family) {
  const auto r = call({"family", "--r-min", "1", "--r-max", "3", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("45"), std::string::npos);
}

TEST(Cli, ScanTiny) {
  const auto r = call({"scan", "--s-max", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("bricks_found=0"), std::string::npos);
}

TEST(Cli, RejectsBadInput) {
  EXPECT_NE(call({"scan", "--s-max", "1e3"}).code, 0);
  EXPECT_NE(call({"scan", "--s-max", "-4"}).code, 0);
  EXPECT_NE(call({"scan", "--bogus"}).code, 0);
  EXPECT_NE(call({"nonsense"}).code, 0);
  EXPECT_EQ(call({"scan", "--s-max", "7"}).code, 2);
  EXPECT_EQ(call({"triple", "--s", "36", "--t", "3"}).code, 2);
  EXPECT_EQ(call({"table", "--s-max", "10", "--format", "xml"}).code != 0, true);
}

TEST(Cli, CheckpointRequiresResume) {
  const fs::path dir = fs::temp_directory_path() / "eulerbrick_cli_ckpt";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string ckpt = (dir / "c.ckpt").string();
  const auto first = call({"scan", "--s-max", "400", "--checkpoint", ckpt, "--halt-after-s", "100"});
  EXPECT_EQ(first.code, 0) << first.err;
  EXPECT_TRUE(fs::exists(ckpt));
  EXPECT_EQ(call({"scan", "--s-max", "400", "--checkpoint", ckpt}).code, 2);
  const auto resumed = call({"scan", "--s-max", "400", "--checkpoint", ckpt, "--resume"});
  EXPECT_EQ(resumed.code, 0) << resumed.err;
  EXPECT_EQ(resumed.out, call({"scan", "--s-max", "400"}).out);
  {
    std::ofstream bad(ckpt);
    bad << "garbage\n";
  }
  EXPECT_EQ(call({"scan", "--s-max", "400", "--checkpoint", ckpt, "--resume"}).code, 2);
  fs::remove_all(dir);
}

TEST(Cli, OracleVerifySmall) {
  const auto r = call({"oracle-verify", "--a-max", "2000", "--max-edge", "300"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}
