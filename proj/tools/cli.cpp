#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "eulerbrick/brick.hpp"
#include "eulerbrick/gnomon.hpp"
#include "eulerbrick/oracle.hpp"
#include "eulerbrick/ppt.hpp"
#include "eulerbrick/scanner.hpp"
#include "eulerbrick/verify.hpp"

namespace eulerbrick::cli {

namespace {

const CLI::Validator kDecimal(
    [](std::string& s) -> std::string {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        return "expected a decimal integer, got '" + s + "'";
      }
      return {};
    },
    "DECIMAL");

const char* kCheckpointDirEnv = "EULERBRICK_CHECKPOINT_DIR";

struct Config {
  std::string format = "plain";
  std::string output;

  // table / scan
  u64 s_max = 0;
  // triple, brick, gnomon
  std::optional<u64> s, t, m, n;
  // reps
  std::optional<u64> even_leg, odd_leg;
  // gnomon transform
  std::optional<u64> area, thickness;
  // family
  u64 r_min = 1;
  u64 r_max = 0;
  // scan
  std::optional<u64> max_edge;
  unsigned workers = 1;
  u64 stride = 100;
  std::string checkpoint;
  bool resume = false;
  std::optional<u64> halt_after_s;
  // oracle-verify
  u64 a_max = 10000;
  u64 verify_max_edge = 500;
};

// Output sink: the requested file or the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::trunc);
      if (!*file_) throw InvalidInput("cannot open output file " + path);
      os_ = file_.get();
    }
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

void require_format(const Config& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (c.format == f) return;
  }
  throw InvalidInput("format '" + c.format + "' is not supported by this subcommand");
}

GeneratingSquare row_from(const Config& c) {
  if (c.s && c.t) {
    if (*c.s == 0 || *c.s % 2 != 0) throw InvalidInput("--s must be even and positive");
    if (*c.s % (2 * *c.t) != 0) throw InvalidInput("--t must divide S/2");
    GeneratingSquare g{*c.s, *c.t, *c.s / (2 * *c.t)};
    g.validate();
    return g;
  }
  if (c.m && c.n) return from_mn({*c.m, *c.n});
  throw InvalidInput("give the row as --s S --t T or as --m M --n N");
}

void print_row_plain(std::ostream& os, const OrdinalIndex& idx, const PrimitiveTriple& tr) {
  os << std::left << std::setw(7) << format_ordinal(idx) << std::right << " S=" << tr.gen.S << " t=" << tr.gen.t
     << " l=" << tr.gen.l << " x=" << tr.x << " y=" << tr.y << " a=" << tr.a << '\n';
}

void print_row_csv(std::ostream& os, const OrdinalIndex& idx, const PrimitiveTriple& tr) {
  os << idx.N << ',' << idx.n << ',' << tr.gen.S << ',' << tr.gen.t << ',' << tr.gen.l << ',' << tr.x << ','
     << tr.y << ',' << tr.a << '\n';
}

int cmd_table(const Config& c, std::ostream& out) {
  require_format(c, {"csv", "plain"});
  Sink sink(c.output, out);
  TripleStream stream(c.s_max);
  if (c.format == "csv") {
    *sink << "N,n,S,t,l,x,y,a\n";
    while (auto row = stream.next()) print_row_csv(*sink, row->index, row->triple);
  } else {
    while (auto row = stream.next()) print_row_plain(*sink, row->index, row->triple);
  }
  return kOk;
}

int cmd_triple(const Config& c, std::ostream& out) {
  require_format(c, {"csv", "plain"});
  const auto gen = row_from(c);
  const auto tr = triple_from(gen);
  const auto idx = ordinal_of(gen);
  Sink sink(c.output, out);
  if (c.format == "csv") {
    *sink << "N,n,S,t,l,x,y,a\n";
    print_row_csv(*sink, idx, tr);
  } else {
    print_row_plain(*sink, idx, tr);
    const auto mn = to_mn(gen);
    *sink << "m=" << mn.m << " n=" << mn.n << '\n';
  }
  return kOk;
}

int cmd_reps(const Config& c, std::ostream& out) {
  require_format(c, {"plain"});
  if (c.even_leg.has_value() == c.odd_leg.has_value()) throw InvalidInput("give exactly one of --even-leg, --odd-leg");
  const bool even = c.even_leg.has_value();
  const u64 leg = even ? *c.even_leg : *c.odd_leg;
  const auto reps = even ? representations_of_even_leg(leg) : representations_of_odd_leg(leg);
  Sink sink(c.output, out);
  *sink << (even ? "even" : "odd") << " leg " << leg << ": " << reps.size() << " representation(s)\n";
  for (const auto& g : reps) {
    const auto tr = triple_from(g);
    print_row_plain(*sink, ordinal_of(g), tr);
  }
  return kOk;
}

void dump_gnomon(std::ostream& os, const char* name, const GnomonDescriptor& g) {
  os << name << ": area=" << g.area << " T=" << g.thickness << " base=" << g.base << " first=" << g.first
     << " middle=" << g.middle.value() << " last=" << g.last << '\n';
  write_terms(os, g);
}

int cmd_gnomon(const Config& c, std::ostream& out) {
  require_format(c, {"plain"});
  Sink sink(c.output, out);
  if (c.area || c.thickness) {
    if (!c.area || !c.thickness) throw InvalidInput("--area and --thickness go together");
    dump_gnomon(*sink, "transformed", transform_gnomon(*c.area, *c.thickness));
    return kOk;
  }
  const auto tr = triple_from(row_from(c));
  const auto g = connected_gnomons(tr);
  print_row_plain(*sink, ordinal_of(tr.gen), tr);
  dump_gnomon(*sink, "G_x", g.of_odd_leg);
  dump_gnomon(*sink, "G_y", g.of_even_leg);
  return kOk;
}

int cmd_brick(const Config& c, std::ostream& out) {
  require_format(c, {"plain", "structured-text"});
  const auto gen = row_from(c);
  const auto tr = triple_from(gen);
  const auto idx = ordinal_of(gen);
  const auto bricks = build_bricks_for(tr, idx);
  Sink sink(c.output, out);
  if (c.format == "structured-text") {
    for (const auto& b : bricks) {
      *sink << format_brick_line(b) << '\n';
      *sink << format_brick_line(alternative_brick(b)) << '\n';
    }
    return kOk;
  }
  print_row_plain(*sink, idx, tr);
  if (bricks.empty()) {
    *sink << "no Euler brick for this row\n";
    return kOk;
  }
  for (const auto& b : bricks) {
    const auto& m = *b.meta;
    const auto alt = alternative_brick(b);
    *sink << "brick x=" << b.x << " y=" << b.y << " z=" << b.z << " a=" << b.a << " b=" << b.b << " c=" << b.c
          << '\n'
          << "  k1=" << m.k1 << " m1=" << m.m1 << " m3=" << m.m3 << " k2=" << m.k2 << " m2=" << m.m2
          << " m4=" << m.m4 << " q=" << m.q << '\n'
          << "  alternative x=" << alt.x << " y=" << alt.y << " z=" << alt.z << " a=" << alt.a << " b=" << alt.b
          << " c=" << alt.c << '\n';
  }
  return kOk;
}

int cmd_family(const Config& c, std::ostream& out) {
  require_format(c, {"csv", "plain"});
  if (c.r_min == 0 || c.r_max < c.r_min) throw InvalidInput("need 1 <= --r-min <= --r-max");
  Sink sink(c.output, out);
  const bool csv = c.format == "csv";
  if (csv) *sink << "kind,r,legA,legB,z,diagA,diagB,third_face_square\n";
  u64 third = 0;
  for (u64 r = c.r_min; r <= c.r_max; ++r) {
    for (const auto& [kind, f] : {std::pair{"family", parametric_family(r)}, std::pair{"alternative", family_alternative(r)}}) {
      third += f.third_face_square ? 1 : 0;
      if (csv) {
        *sink << kind << ',' << f.r << ',' << f.legA << ',' << f.legB << ',' << f.z << ',' << f.diagA << ','
              << f.diagB << ',' << (f.third_face_square ? 1 : 0) << '\n';
      } else {
        *sink << kind << " r=" << f.r << " legA=" << f.legA << " legB=" << f.legB << " z=" << f.z
              << " diagA=" << f.diagA << " diagB=" << f.diagB << " third_face_square=" << f.third_face_square
              << '\n';
      }
    }
  }
  if (!csv) *sink << "third_face_square_count=" << third << '\n';
  return kOk;
}

std::filesystem::path checkpoint_path(const std::string& flag) {
  std::filesystem::path p(flag);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kCheckpointDirEnv); dir != nullptr && *dir != '\0') return std::filesystem::path(dir) / p;
  }
  return p;
}

int cmd_scan(const Config& c, std::ostream& out, std::ostream& err) {
  require_format(c, {"structured-text", "plain"});
  ScanOptions opt;
  opt.s_max = c.s_max;
  opt.max_edge = c.max_edge;
  opt.workers = c.workers;
  opt.stride = c.stride;
  opt.halt_after_S = c.halt_after_s;

  std::optional<ScanCheckpoint> resume;
  if (!c.checkpoint.empty()) {
    const auto path = checkpoint_path(c.checkpoint);
    opt.checkpoint_path = path;
    if (c.resume) {
      resume = load_checkpoint(path);
    } else if (std::filesystem::exists(path)) {
      throw CheckpointError("checkpoint " + path.string() + " exists; pass --resume or remove it");
    }
  } else if (c.resume) {
    throw InvalidInput("--resume needs --checkpoint");
  }

  const auto report = scan(opt, resume);
  Sink sink(c.output, out);
  write_report(*sink, report);
  if (!report.complete) {
    err << "scan halted after S=" << report.last_completed_S << "; resume with --resume\n";
  }
  if (report.perfect_cuboids_found() != 0) {
    err << "FINDING: " << report.perfect_cuboids_found()
        << " brick(s) with an integral space diagonal; see finding= lines in the report\n";
    return kFinding;
  }
  return kOk;
}

int cmd_oracle_verify(const Config& c, std::ostream& out) {
  require_format(c, {"plain"});
  Sink sink(c.output, out);
  bool ok = true;

  const auto tc = compare_triples(c.a_max);
  *sink << (tc.equal() ? "PASS" : "FAIL") << " triples a_max=" << tc.a_max << " table=" << tc.table_count
        << " classical=" << tc.oracle_count << " missing=" << tc.missing_from_table.size()
        << " extra=" << tc.extra_in_table.size() << '\n';
  for (const auto& t : tc.missing_from_table) *sink << "  missing " << t.x << ' ' << t.y << ' ' << t.a << '\n';
  for (const auto& t : tc.extra_in_table) *sink << "  extra " << t.x << ' ' << t.y << ' ' << t.a << '\n';
  ok = ok && tc.equal();

  const auto bc = compare_bricks(c.verify_max_edge, std::nullopt, c.workers);
  *sink << (bc.equal() ? "PASS" : "FAIL") << " bricks max_edge=" << bc.max_edge << " s_max=" << bc.s_max
        << " brute_force_primitive=" << bc.oracle_primitive.size() << " scan_primitive=" << bc.scan_primitive.size()
        << '\n';
  for (const auto& e : bc.missing_from_scan) {
    *sink << "  missing " << e[0] << ' ' << e[1] << ' ' << e[2];
    if (auto S = first_primitive_face_S(e[0], e[1], e[2])) {
      *sink << " (primitive face at S=" << *S << ")\n";
    } else {
      *sink << " (no primitive face pair)\n";
    }
  }
  for (const auto& e : bc.extra_in_scan) *sink << "  extra " << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
  ok = ok && bc.equal();

  *sink << (ok ? "oracle-verify: all checks passed" : "oracle-verify: FAILED") << '\n';
  return ok ? kOk : kValidationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Ordered primitive Pythagorean triples, gnomons and Euler bricks", "eulerbrick"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "structured-text", "plain"}));
    sub->add_option("-o,--output", c.output, "Write output to this file instead of stdout");
  };
  auto add_row = [&](CLI::App* sub) {
    sub->add_option("--s", c.s, "Generating square side S")->check(kDecimal);
    sub->add_option("--t", c.t, "Parameter t")->check(kDecimal);
    sub->add_option("--m", c.m, "Classical parameter m")->check(kDecimal);
    sub->add_option("--n", c.n, "Classical parameter n")->check(kDecimal);
  };

  auto* table = app.add_subcommand("table", "Ordered triple table for S = 2..S_max");
  table->add_option("--s-max", c.s_max, "Largest generating square side")->required()->check(kDecimal);

  auto* triple = app.add_subcommand("triple", "One row, from (S, t) or (m, n)");
  add_row(triple);

  auto* reps = app.add_subcommand("reps", "Every primitive triple containing a leg");
  reps->add_option("--even-leg", c.even_leg, "Even leg y")->check(kDecimal);
  reps->add_option("--odd-leg", c.odd_leg, "Odd leg x")->check(kDecimal);

  auto* gnomon = app.add_subcommand("gnomon", "Connected gnomons of a row, or one gnomon transformation");
  add_row(gnomon);
  gnomon->add_option("--area", c.area, "Gnomon area to transform")->check(kDecimal);
  gnomon->add_option("--thickness", c.thickness, "New thickness")->check(kDecimal);

  auto* brick = app.add_subcommand("brick", "Euler bricks built from one row, with alternatives");
  add_row(brick);

  auto* family = app.add_subcommand("family", "The (2r+1) family and its alternative");
  family->add_option("--r-min", c.r_min, "First r")->check(kDecimal);
  family->add_option("--r-max", c.r_max, "Last r")->required()->check(kDecimal);

  auto* scan_cmd = app.add_subcommand("scan", "Sweep rows, build bricks, test space diagonals");
  scan_cmd->add_option("--s-max", c.s_max, "Largest generating square side")->required()->check(kDecimal);
  scan_cmd->add_option("--max-edge", c.max_edge, "Keep bricks with every edge <= this bound")->check(kDecimal);
  scan_cmd->add_option("--workers", c.workers, "Worker threads")->check(kDecimal)->check(CLI::PositiveNumber);
  scan_cmd->add_option("--stride", c.stride, "Checkpoint stride in S units")->check(kDecimal);
  scan_cmd->add_option("--checkpoint", c.checkpoint,
                       std::string("Checkpoint file (relative paths resolve under $") + kCheckpointDirEnv + ")");
  scan_cmd->add_flag("--resume", c.resume, "Resume from --checkpoint");
  scan_cmd->add_option("--halt-after-s", c.halt_after_s, "Stop after the block containing this S")->check(kDecimal);

  auto* verify = app.add_subcommand("oracle-verify", "Compare constructions with brute-force oracles");
  verify->add_option("--a-max", c.a_max, "Hypotenuse bound for the triple comparison")->check(kDecimal);
  verify->add_option("--max-edge", c.verify_max_edge, "Edge bound for the brick comparison")->check(kDecimal);
  verify->add_option("--workers", c.workers, "Worker threads")->check(kDecimal)->check(CLI::PositiveNumber);

  for (auto* sub : {table, triple, reps, gnomon, brick, family, scan_cmd, verify}) add_format(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return e.get_exit_code() == 0 ? kInputError : e.get_exit_code();
  }
  // the table defaults to CSV, scan reports to brick lines
  if (*table && table->count("--format") == 0) c.format = "csv";
  if (*scan_cmd && scan_cmd->count("--format") == 0) c.format = "structured-text";

  try {
    if (*table) return cmd_table(c, out);
    if (*triple) return cmd_triple(c, out);
    if (*reps) return cmd_reps(c, out);
    if (*gnomon) return cmd_gnomon(c, out);
    if (*brick) return cmd_brick(c, out);
    if (*family) return cmd_family(c, out);
    if (*scan_cmd) return cmd_scan(c, out, err);
    if (*verify) return cmd_oracle_verify(c, out);
  } catch (const ValidationError& e) {
    err << "validation failure: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return kInputError;
  } catch (const CheckpointError& e) {
    err << "checkpoint error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInputError;
  } catch (const NotRepresentable& e) {
    err << "not representable: " << e.what() << '\n';
    return kInputError;
  }
  err << app.help();
  return kInputError;
}

}  // namespace eulerbrick::cli
