#pragma once

// Sweep over the ordered triple table: build every brick, test each one for an
// integral space diagonal, and checkpoint at block boundaries.
//
// Work is split into blocks of S values, (i*stride, (i+1)*stride]. Workers
// build blocks independently; the coordinator commits them in order, so the
// report does not depend on the worker count.

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulerbrick/brick.hpp"

namespace eulerbrick {

struct CuboidTestResult {
  EulerBrick brick;
  u128 diagonal_square = 0;  // x^2 + y^2 + z^2
  std::optional<u64> d;      // present iff diagonal_square is a perfect square
};

/// x^2 + y^2 + z^2 = d^2, evaluated directly and as x^2+b^2, y^2+c^2, a^2+z^2.
/// When a, b and c are all zero the record is a bare box and only the direct sum is used.
CuboidTestResult space_diagonal_check(const EulerBrick& brick);

/// Order-independent digest of a set of bricks, keyed by sorted edges.
class BrickDigest {
 public:
  void add(const EulerBrick& brick);
  u64 value() const { return sum_ ^ (xor_ << 1); }
  std::string hex() const;

 private:
  u64 sum_ = 0;
  u64 xor_ = 0;
};

struct ScanEntry {
  EulerBrick brick;                   // as first constructed
  std::vector<OrdinalIndex> sources;  // every row that produced it, in scan order
  CuboidTestResult cuboid;
};

struct ScanCheckpoint {
  static constexpr int kFormatVersion = 1;

  u64 s_max = 0;
  std::optional<u64> max_edge;
  u64 last_completed_S = 0;
  u64 rows_processed = 0;
  u64 bricks_found = 0;
  u64 primitive_bricks_found = 0;
  u64 perfect_cuboids_found = 0;
  std::string brick_digest;
  std::vector<ScanEntry> entries;
};

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScanOptions {
  u64 s_max = 2;
  std::optional<u64> max_edge;
  unsigned workers = 1;
  u64 stride = 100;  // S units per block; even
  std::optional<std::filesystem::path> checkpoint_path;
  /// Stop after committing the block that contains this S (simulated interruption).
  std::optional<u64> halt_after_S;
  /// Called after every committed block with the checkpoint state.
  std::function<void(const ScanCheckpoint&)> on_commit;
};

struct ScanReport {
  u64 s_max = 0;
  std::optional<u64> max_edge;
  u64 last_completed_S = 0;
  bool complete = false;
  u64 rows_processed = 0;
  u64 primitive_bricks_found = 0;
  std::vector<ScanEntry> entries;
  std::vector<CuboidTestResult> perfect_cuboids;
  std::string brick_digest;

  u64 bricks_found() const { return entries.size(); }
  u64 perfect_cuboids_found() const { return perfect_cuboids.size(); }
};

/// Runs (or resumes) the sweep. Throws CheckpointError when `resume` does not fit the options.
ScanReport scan(const ScanOptions& options, const std::optional<ScanCheckpoint>& resume = std::nullopt);

/// Brick lines followed by the summary block.
void write_report(std::ostream& os, const ScanReport& report);
std::string format_report(const ScanReport& report);

void write_checkpoint(std::ostream& os, const ScanCheckpoint& ckpt);
/// Writes to a temporary sibling and renames it into place.
void save_checkpoint(const std::filesystem::path& path, const ScanCheckpoint& ckpt);
/// Parses and verifies counts and digest; throws CheckpointError on any inconsistency.
ScanCheckpoint read_checkpoint(std::istream& is);
ScanCheckpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace eulerbrick
