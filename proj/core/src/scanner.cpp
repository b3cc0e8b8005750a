#include "eulerbrick/scanner.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "eulerbrick/isqrt.hpp"
#include "eulerbrick/oracle.hpp"

namespace eulerbrick {

namespace {

u64 splitmix64(u64 v) {
  v += 0x9e3779b97f4a7c15ULL;
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
  return v ^ (v >> 31);
}

std::string optional_to_string(const std::optional<u64>& v) { return v ? std::to_string(*v) : "none"; }

struct Found {
  EulerBrick brick;
  CuboidTestResult cuboid;
};

struct BlockResult {
  u64 lo = 0;
  u64 hi = 0;
  u64 rows = 0;
  std::vector<Found> found;  // ordered by (S, n, z)
};

BlockResult run_block(u64 lo, u64 hi, const std::optional<u64>& max_edge) {
  BlockResult res{lo, hi, 0, {}};
  for (u64 S = lo; S <= hi; S += 2) {
    const auto block = partitions_of(S);
    res.rows += block.size();
    for (std::size_t i = 0; i < block.size(); ++i) {
      const auto triple = triple_from(block[i]);
      for (auto& br : build_bricks_for(triple, OrdinalIndex{S / 2, i + 1})) {
        if (max_edge && (br.x > *max_edge || br.y > *max_edge || br.z > *max_edge)) continue;
        if (!oracle::satisfies_face_system(br.x, br.y, br.z, br.a, br.b, br.c) || br.z % 2 != 0) {
          throw ValidationError("scanner re-check failed for " + format_brick_line(br));
        }
        auto cuboid = space_diagonal_check(br);
        res.found.push_back({std::move(br), std::move(cuboid)});
      }
    }
  }
  return res;
}

// Accumulated scan state; identical whether built in one run or restored from a checkpoint.
class Accumulator {
 public:
  void restore(const ScanCheckpoint& ckpt) {
    rows_ = ckpt.rows_processed;
    last_S_ = ckpt.last_completed_S;
    for (const auto& e : ckpt.entries) {
      index_.emplace(e.brick.sorted_edges(), entries_.size());
      entries_.push_back(e);
    }
  }

  void commit(BlockResult&& block) {
    rows_ += block.rows;
    last_S_ = block.hi;
    for (auto& f : block.found) {
      const OrdinalIndex src = *f.brick.meta->source;
      auto [it, inserted] = index_.emplace(f.brick.sorted_edges(), entries_.size());
      if (inserted) {
        entries_.push_back({std::move(f.brick), {src}, std::move(f.cuboid)});
      } else {
        entries_[it->second].sources.push_back(src);
      }
    }
  }

  u64 last_completed_S() const { return last_S_; }

  ScanCheckpoint checkpoint(u64 s_max, const std::optional<u64>& max_edge) const {
    ScanCheckpoint c;
    c.s_max = s_max;
    c.max_edge = max_edge;
    c.last_completed_S = last_S_;
    c.rows_processed = rows_;
    c.entries = entries_;
    BrickDigest digest;
    for (const auto& e : entries_) {
      digest.add(e.brick);
      if (e.brick.primitive()) ++c.primitive_bricks_found;
      if (e.cuboid.d) ++c.perfect_cuboids_found;
    }
    c.bricks_found = entries_.size();
    c.brick_digest = digest.hex();
    return c;
  }

 private:
  u64 rows_ = 0;
  u64 last_S_ = 0;
  std::vector<ScanEntry> entries_;
  std::map<std::array<u64, 3>, std::size_t> index_;
};

std::vector<std::pair<u64, u64>> plan_blocks(u64 first, u64 s_max, u64 stride) {
  std::vector<std::pair<u64, u64>> out;
  for (u64 lo = first; lo <= s_max;) {
    const u64 boundary = ((lo + stride - 1) / stride) * stride;
    const u64 hi = std::min(boundary, s_max);
    out.emplace_back(lo, hi);
    lo = hi + 2;
  }
  return out;
}

[[noreturn]] void bad_checkpoint(const std::string& why) { throw CheckpointError("corrupted checkpoint: " + why); }

}  // namespace

CuboidTestResult space_diagonal_check(const EulerBrick& br) {
  CuboidTestResult res;
  res.brick = br;
  res.diagonal_square = sum_squares(br.x, br.y, br.z);
  // a record with all face diagonals zero is a bare box
  const bool bare = br.a == 0 && br.b == 0 && br.c == 0;
  const u128 via_b = square(br.x) + square(br.b);
  const u128 via_c = square(br.y) + square(br.c);
  const u128 via_a = square(br.a) + square(br.z);
  if (!bare && (via_b != res.diagonal_square || via_c != res.diagonal_square || via_a != res.diagonal_square)) {
    throw ValidationError("space diagonal groupings disagree for " + format_brick_line(br));
  }
  res.d = isqrt_exact(res.diagonal_square);
  return res;
}

void BrickDigest::add(const EulerBrick& brick) {
  const auto e = brick.sorted_edges();
  const u64 h = splitmix64(splitmix64(splitmix64(e[0]) ^ e[1]) ^ e[2]);
  sum_ += h;
  xor_ ^= h;
}

std::string BrickDigest::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value()));
  return buf;
}

ScanReport scan(const ScanOptions& options, const std::optional<ScanCheckpoint>& resume) {
  if (options.s_max < 2 || options.s_max % 2 != 0) throw InvalidInput("scan: S_max must be even and >= 2");
  if (options.stride < 2 || options.stride % 2 != 0) throw InvalidInput("scan: stride must be even and >= 2");
  if (options.max_edge && *options.max_edge == 0) throw InvalidInput("scan: max_edge must be positive");

  Accumulator acc;
  if (resume) {
    if (resume->max_edge != options.max_edge) {
      throw CheckpointError("checkpoint was written with max_edge=" + optional_to_string(resume->max_edge) +
                            ", scan requested max_edge=" + optional_to_string(options.max_edge));
    }
    if (resume->last_completed_S > options.s_max) {
      throw CheckpointError("checkpoint already covers S=" + std::to_string(resume->last_completed_S) +
                            " beyond S_max=" + std::to_string(options.s_max));
    }
    acc.restore(*resume);
  }

  const auto blocks = plan_blocks(acc.last_completed_S() + 2, options.s_max, options.stride);
  const unsigned workers = std::max(1U, options.workers);

  std::vector<std::optional<BlockResult>> results(blocks.size());
  std::vector<std::exception_ptr> errors(blocks.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= blocks.size() || stop.load()) return;
      std::optional<BlockResult> r;
      std::exception_ptr err;
      try {
        r = run_block(blocks[i].first, blocks[i].second, options.max_edge);
      } catch (...) {
        err = std::current_exception();
      }
      {
        std::lock_guard lock(mu);
        results[i] = std::move(r);
        errors[i] = err;
      }
      ready.notify_all();
    }
  };

  std::vector<std::thread> pool;
  if (workers > 1) {
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  auto shutdown = [&] {
    stop = true;
    for (auto& t : pool) t.join();
    pool.clear();
  };

  try {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      BlockResult block;
      if (workers == 1) {
        block = run_block(blocks[i].first, blocks[i].second, options.max_edge);
      } else {
        std::unique_lock lock(mu);
        ready.wait(lock, [&] { return results[i].has_value() || errors[i] != nullptr; });
        if (errors[i]) std::rethrow_exception(errors[i]);
        block = std::move(*results[i]);
        results[i].reset();
      }
      acc.commit(std::move(block));
      if (options.checkpoint_path || options.on_commit) {
        const auto ckpt = acc.checkpoint(options.s_max, options.max_edge);
        if (options.checkpoint_path) save_checkpoint(*options.checkpoint_path, ckpt);
        if (options.on_commit) options.on_commit(ckpt);
      }
      if (options.halt_after_S && acc.last_completed_S() >= *options.halt_after_S) break;
    }
  } catch (...) {
    shutdown();
    throw;
  }
  shutdown();

  const auto state = acc.checkpoint(options.s_max, options.max_edge);
  ScanReport report;
  report.s_max = options.s_max;
  report.max_edge = options.max_edge;
  report.last_completed_S = state.last_completed_S;
  report.complete = state.last_completed_S >= options.s_max;
  report.rows_processed = state.rows_processed;
  report.primitive_bricks_found = state.primitive_bricks_found;
  report.entries = state.entries;
  report.brick_digest = state.brick_digest;
  for (const auto& e : report.entries) {
    if (e.cuboid.d) report.perfect_cuboids.push_back(e.cuboid);
  }
  return report;
}

void write_report(std::ostream& os, const ScanReport& r) {
  os << "# eulerbrick scan report format_version=" << ScanCheckpoint::kFormatVersion << '\n';
  for (const auto& e : r.entries) os << format_brick_line(e.brick, e.sources) << '\n';
  os << "# summary\n"
     << "s_max=" << r.s_max << '\n'
     << "max_edge=" << optional_to_string(r.max_edge) << '\n'
     << "last_completed_S=" << r.last_completed_S << '\n'
     << "complete=" << (r.complete ? 1 : 0) << '\n'
     << "rows_processed=" << r.rows_processed << '\n'
     << "bricks_found=" << r.bricks_found() << '\n'
     << "primitive_bricks_found=" << r.primitive_bricks_found << '\n'
     << "perfect_cuboids_found=" << r.perfect_cuboids_found() << '\n'
     << "brick_digest=" << r.brick_digest << '\n';
  for (const auto& pc : r.perfect_cuboids) {
    os << "finding=perfect_cuboid x=" << pc.brick.x << " y=" << pc.brick.y << " z=" << pc.brick.z
       << " d=" << *pc.d << '\n';
  }
}

std::string format_report(const ScanReport& report) {
  std::ostringstream os;
  write_report(os, report);
  return os.str();
}

void write_checkpoint(std::ostream& os, const ScanCheckpoint& c) {
  os << "# eulerbrick scan checkpoint\n"
     << "format_version=" << ScanCheckpoint::kFormatVersion << '\n'
     << "s_max=" << c.s_max << '\n'
     << "max_edge=" << optional_to_string(c.max_edge) << '\n'
     << "last_completed_S=" << c.last_completed_S << '\n'
     << "rows_processed=" << c.rows_processed << '\n'
     << "bricks_found=" << c.bricks_found << '\n'
     << "primitive_bricks_found=" << c.primitive_bricks_found << '\n'
     << "perfect_cuboids_found=" << c.perfect_cuboids_found << '\n'
     << "brick_digest=" << c.brick_digest << '\n';
  for (const auto& e : c.entries) os << "brick=" << format_brick_line(e.brick, e.sources) << '\n';
}

void save_checkpoint(const std::filesystem::path& path, const ScanCheckpoint& ckpt) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CheckpointError("cannot write checkpoint " + tmp.string());
    write_checkpoint(out, ckpt);
    out.flush();
    if (!out) throw CheckpointError("failed writing checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

ScanCheckpoint read_checkpoint(std::istream& is) {
  std::map<std::string, std::string> kv;
  std::vector<std::string> brick_lines;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) bad_checkpoint("line without '=': " + line);
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (key == "brick") {
      brick_lines.push_back(std::move(value));
    } else if (!kv.emplace(std::move(key), std::move(value)).second) {
      bad_checkpoint("duplicate key " + line.substr(0, eq));
    }
  }

  auto get = [&](const char* key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) bad_checkpoint(std::string("missing key ") + key);
    return it->second;
  };
  auto number = [&](const char* key) -> u64 {
    const std::string& s = get(key);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      bad_checkpoint(std::string("non-numeric ") + key + "=" + s);
    }
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      bad_checkpoint(std::string("out of range ") + key + "=" + s);
    }
  };

  if (get("format_version") != std::to_string(ScanCheckpoint::kFormatVersion)) {
    bad_checkpoint("unsupported format_version " + get("format_version"));
  }
  ScanCheckpoint c;
  c.s_max = number("s_max");
  if (get("max_edge") != "none") c.max_edge = number("max_edge");
  c.last_completed_S = number("last_completed_S");
  c.rows_processed = number("rows_processed");
  c.bricks_found = number("bricks_found");
  c.primitive_bricks_found = number("primitive_bricks_found");
  c.perfect_cuboids_found = number("perfect_cuboids_found");
  c.brick_digest = get("brick_digest");
  if (kv.size() != 9) bad_checkpoint("unexpected keys present");
  if (c.last_completed_S % 2 != 0 || c.last_completed_S > c.s_max) {
    bad_checkpoint("last_completed_S=" + std::to_string(c.last_completed_S) + " inconsistent with s_max");
  }

  BrickDigest digest;
  u64 primitive = 0;
  u64 perfect = 0;
  for (const auto& bl : brick_lines) {
    ParsedBrickLine parsed;
    try {
      parsed = parse_brick_line(bl);
    } catch (const InvalidInput& e) {
      bad_checkpoint(e.what());
    }
    const auto& br = parsed.brick;
    if (!br.meta || parsed.sources.empty()) bad_checkpoint("brick without construction data: " + bl);
    if (!oracle::satisfies_face_system(br.x, br.y, br.z, br.a, br.b, br.c)) bad_checkpoint("invalid brick: " + bl);
    ScanEntry e{br, parsed.sources, space_diagonal_check(br)};
    digest.add(br);
    if (br.primitive()) ++primitive;
    if (e.cuboid.d) ++perfect;
    c.entries.push_back(std::move(e));
  }
  if (c.entries.size() != c.bricks_found) bad_checkpoint("bricks_found does not match the stored bricks");
  if (primitive != c.primitive_bricks_found) bad_checkpoint("primitive_bricks_found does not match");
  if (perfect != c.perfect_cuboids_found) bad_checkpoint("perfect_cuboids_found does not match");
  if (digest.hex() != c.brick_digest) bad_checkpoint("brick_digest mismatch");
  return c;
}

ScanCheckpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CheckpointError("cannot open checkpoint " + path.string());
  return read_checkpoint(in);
}

}  // namespace eulerbrick
