#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "orientable/bounds.hpp"
#include "orientable/concat_tree.hpp"
#include "orientable/cyclejoin.hpp"
#include "orientable/errors.hpp"
#include "orientable/search.hpp"
#include "orientable/successor.hpp"
#include "orientable/verify.hpp"

namespace orientable::cli {
namespace {

// Raised for bad flag values that CLI11 cannot validate on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  std::size_t lo;
  std::size_t hi;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const std::size_t v = std::stoul(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const std::size_t lo = std::stoul(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const std::size_t hi = std::stoul(b, &used);
    if (used != b.size() || hi < lo) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("bad range '" + text + "', expected N or A..B");
  }
}

std::string format_bits(const CyclicSequence& seq, std::size_t n, const std::string& format) {
  const std::string bits = seq.to_string();
  if (format == "ascii") return bits + "\n";
  if (format == "grouped") {
    std::string out;
    for (std::size_t i = 0; i < bits.size(); i += n) {
      if (i > 0) out += ' ';
      out += bits.substr(i, n);
    }
    return out + "\n";
  }
  // hex: most significant bit first, a short final nibble padded with zeros
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    unsigned v = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      v <<= 1;
      if (i + k < bits.size() && bits[i + k] == '1') v |= 1;
    }
    out += kDigits[v];
  }
  return out + "\n";
}

CyclicSequence read_sequence(const std::string& path, SequenceMode mode) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::string bits;
  char c;
  while (in.get(c)) {
    if (c == '0' || c == '1') {
      bits += c;
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw UsageError(path + " contains a character other than 0, 1 or whitespace");
    }
  }
  return CyclicSequence::from_string(bits, mode);
}

void write_or_print(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("ORIENTABLE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
    throw UsageError("ORIENTABLE_BUDGET must be a positive integer");
  }
  return kDefaultBudget;
}

struct GenerateArgs {
  std::size_t n = 0;
  std::string algo = "rcl";
  std::string seed;
  std::string format = "ascii";
  std::string output;
  bool check = false;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  if (a.n < kMinOrder) throw UnsupportedSize("unsupported order n=" + std::to_string(a.n) + ", generators need n >= 6");
  if (a.algo == "rcl" && !a.seed.empty()) throw UsageError("--seed applies to the successor algorithm only");
  std::optional<BinaryWord> seed;
  if (!a.seed.empty()) {
    try {
      seed = BinaryWord::from_string(a.seed);
    } catch (const std::invalid_argument&) {
      throw UsageError("seed must be a non-empty 0/1 string");
    }
  }
  const CyclicSequence seq = a.algo == "rcl" ? fast_rcl_sequence(a.n) : generate_from_successor(a.n, seed);
  write_or_print(format_bits(seq, a.n, a.format), a.output, out);
  if (a.check) {
    const Coverage c = check_covers_S(seq, a.n);
    if (c != Coverage::covered) {
      err << "check failed: " << to_string(c) << "\n";
      return kExitVerifyFailed;
    }
    err << "check passed: " << seq.size() << " windows cover S(" << a.n << ")\n";
  }
  return kExitOk;
}

int cmd_bounds(const std::string& range_text, std::ostream& out) {
  const Range r = parse_range(range_text);
  if (r.lo < 2 || r.hi > kMaxBoundOrder) {
    throw UsageError("bounds range must lie within 2.." + std::to_string(kMaxBoundOrder));
  }
  out << std::setw(3) << "n" << std::setw(22) << "L_n" << std::setw(22) << "U_n" << std::setw(22)
      << "trivial" << std::setw(22) << "aos_upper" << std::setw(14) << "|A(n)|" << "\n";
  for (std::size_t n = r.lo; n <= r.hi; ++n) {
    const BoundsRecord rec = bounds_record(n);
    out << std::setw(3) << n << std::setw(22) << to_string(rec.lower) << std::setw(22)
        << (rec.upper ? to_string(*rec.upper) : "-") << std::setw(22) << to_string(rec.trivial)
        << std::setw(22) << to_string(rec.aos_upper) << std::setw(14)
        << (rec.asym_count ? to_string(*rec.asym_count) : "unavailable") << "\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string path;
  std::size_t n = 0;
  std::string mode = "cyclic";
  bool full = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto mode = a.mode == "acyclic" ? SequenceMode::acyclic : SequenceMode::cyclic;
  const CyclicSequence seq = read_sequence(a.path, mode);
  if (seq.size() < a.n) {
    throw UsageError("sequence of length " + std::to_string(seq.size()) + " is shorter than n = " +
                     std::to_string(a.n));
  }
  const OrientabilityReport report = check_orientable(seq, a.n);
  if (!report.ok()) {
    out << "not orientable: " << report.describe() << "\n";
    return kExitVerifyFailed;
  }
  out << "orientable: " << window_count(seq, a.n) << " windows of length " << a.n << "\n";
  if (a.full && seq.cyclic() && a.n >= 2 && Int128(seq.size()) == lower_bound_L(a.n)) {
    const Coverage c = check_covers_S(seq, a.n);
    if (c != Coverage::covered) {
      out << "coverage: " << to_string(c) << "\n";
      return kExitVerifyFailed;
    }
    out << "coverage: windows are exactly S(" << a.n << ")\n";
  } else if (a.full) {
    out << "coverage: skipped, length is not L_" << a.n << "\n";
  }
  return kExitOk;
}

int cmd_tree(std::size_t n, bool dot, std::ostream& out) {
  const CycleJoinTree tree = build_tree(n);
  if (dot) {
    out << tree.to_dot();
    return kExitOk;
  }
  out << "nodes " << tree.nodes().size() << ", height " << tree.height() << "\n";
  std::vector<std::size_t> pending{0};
  while (!pending.empty()) {
    const TreeNode& node = tree.nodes()[pending.back()];
    pending.pop_back();
    out << std::string(2 * node.depth, ' ') << node.label.to_string();
    if (node.rule) out << "  " << to_string(*node.rule) << " @" << *node.flip_index;
    out << "\n";
    pending.insert(pending.end(), node.children.rbegin(), node.children.rend());
  }
  return kExitOk;
}

struct ExtendArgs {
  std::size_t n = 0;
  std::string heuristic = "b";
  std::optional<std::uint64_t> budget;
  std::uint64_t dfs_budget = 0;
  std::string input;
  std::string output;
  bool aos = false;
  bool odd_weight = false;
};

int cmd_extend(const ExtendArgs& a, std::ostream& out) {
  SearchOptions options;
  options.heuristic = a.heuristic == "a" ? Heuristic::a : a.heuristic == "c" ? Heuristic::c : Heuristic::b;
  options.budget = a.budget ? *a.budget : default_budget();
  options.dfs_budget = a.dfs_budget;
  options.odd_weight_filter = a.odd_weight;
  if (options.budget == 0) throw UsageError("--budget must be positive");

  const CyclicSequence start =
      a.input.empty() ? generate_from_successor(a.n) : read_sequence(a.input, SequenceMode::cyclic);
  const SearchResult result = a.aos ? search_aos(start, a.n, options) : extend_cyclic(start, a.n, options);
  const std::size_t base = a.aos ? start.size() + a.n - 1 : start.size();
  out << (a.aos ? "acyclic" : "cyclic") << " n=" << a.n << " heuristic=" << a.heuristic << ": length "
      << base << " -> " << result.sequence.size() << " (" << result.expansions << " expansions"
      << (result.budget_exhausted ? ", budget exhausted" : "") << ")\n";
  if (!a.output.empty()) write_or_print(result.sequence.to_string() + "\n", a.output, out);
  if (!is_orientable(result.sequence, a.n)) {
    out << "result failed the orientability check\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_optimum(std::size_t n, std::ostream& out) {
  const CyclicSequence best = exhaustive_max(n);
  out << "n=" << n << " maximum length " << best.size() << "\n";
  if (best.size() > 0) out << best.to_string() << "\n";
  return kExitOk;
}

struct BenchArgs {
  std::string range = "16..24";
  std::string algo = "both";
  int repeat = 3;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  const Range r = parse_range(a.range);
  if (r.lo < kMinOrder || r.hi > 30) throw UsageError("bench range must lie within 6..30");
  if (a.repeat < 1) throw UsageError("--repeat must be at least 1");
  out << std::setw(3) << "n" << std::setw(11) << "algo" << std::setw(12) << "bits" << std::setw(10)
      << "ns/bit" << std::setw(12) << "tests/bit" << "\n";
  for (const std::string algo : {"successor", "rcl"}) {
    if (a.algo != "both" && a.algo != algo) continue;
    double lo = 0;
    double hi = 0;
    for (std::size_t n = r.lo; n <= r.hi; ++n) {
      double best = 0;
      std::uint64_t bits = 0;
      std::uint64_t tests = 0;
      for (int rep = 0; rep < a.repeat; ++rep) {
        BitHasher sink;
        const auto t0 = std::chrono::steady_clock::now();
        if (algo == "rcl") {
          const RclStats s = fast_rcl(n, std::ref(sink));
          tests = s.probes.membership_tests;
        } else {
          ProbeStats probes;
          generate_from_successor(n, std::nullopt, std::ref(sink), &probes);
          tests = probes.membership_tests;
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bits = sink.length();
        const double per_bit = secs * 1e9 / static_cast<double>(bits);
        best = rep == 0 ? per_bit : std::min(best, per_bit);
      }
      lo = n == r.lo ? best : std::min(lo, best);
      hi = n == r.lo ? best : std::max(hi, best);
      out << std::setw(3) << n << std::setw(11) << algo << std::setw(12) << bits << std::fixed
          << std::setprecision(1) << std::setw(10) << best << std::setprecision(3) << std::setw(12)
          << static_cast<double>(tests) / static_cast<double>(bits) << "\n";
      out.unsetf(std::ios::fixed);
    }
    out << algo << " spread max/min ns/bit: " << std::setprecision(3) << hi / lo << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orientable sequence constructions, checks and searches"};
  app.name("orientable");
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a cyclic orientable sequence of length L_n");
  generate->add_option("--n", gen.n, "Window length")->required();
  generate->add_option("--algo", gen.algo, "Generator")->check(CLI::IsMember({"successor", "rcl"}));
  generate->add_option("--seed", gen.seed, "Starting window for the successor rule");
  generate->add_option("--format", gen.format, "Output format")->check(CLI::IsMember({"ascii", "grouped", "hex"}));
  generate->add_option("--output,-o", gen.output, "Write to a file instead of stdout");
  generate->add_flag("--check", gen.check, "Confirm the windows are exactly S(n)");

  std::string bounds_range = "5..20";
  auto* bounds = app.add_subcommand("bounds", "Tabulate L_n, U_n, the trivial and acyclic bounds, |A(n)|");
  bounds->add_option("--n", bounds_range, "Order or range A..B");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Check a file of bits for orientability");
  verify->add_option("file", ver.path, "File of 0/1 characters")->required();
  verify->add_option("--n", ver.n, "Window length")->required()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  verify->add_option("--mode", ver.mode, "Window reading")->check(CLI::IsMember({"cyclic", "acyclic"}));
  verify->add_flag("--full", ver.full, "Also check that the windows are exactly S(n) when the length is L_n");

  std::size_t tree_n = 0;
  bool tree_dot = false;
  auto* tree = app.add_subcommand("tree", "Print the cycle-joining tree");
  tree->add_option("--n", tree_n, "Order")->required()->check(CLI::Range(kMinOrder, kMaxTreeOrder));
  tree->add_flag("--dot", tree_dot, "Graphviz output");

  ExtendArgs ext;
  auto* extend = app.add_subcommand("extend", "Lengthen the construction by backtracking search");
  extend->add_option("--n", ext.n, "Window length")->required()->check(CLI::Range(std::size_t{2}, kMaxSearchOrder));
  extend->add_option("--heuristic", ext.heuristic, "Extension schedule")->check(CLI::IsMember({"a", "b", "c"}));
  extend->add_option("--budget", ext.budget, "Node expansions (default $ORIENTABLE_BUDGET or 10^7)");
  extend->add_option("--dfs-budget", ext.dfs_budget, "Node expansions per single search, 0 for no cap");
  extend->add_option("--input", ext.input, "Start from this cyclic sequence instead of the construction");
  extend->add_option("--output,-o", ext.output, "Write the result bits to a file");
  extend->add_flag("--aos", ext.aos, "Build and extend an acyclic sequence");
  extend->add_flag("--odd-weight", ext.odd_weight, "Accept only odd-weight results with at most one 0^(n-4)");

  std::size_t opt_n = 0;
  auto* optimum = app.add_subcommand("optimum", "Exhaustive maximum-length search");
  optimum->add_option("--n", opt_n, "Window length")->required()->check(CLI::Range(std::size_t{2}, kMaxExhaustiveOrder));

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time both generators per output bit");
  bench->add_option("--n", bench_args.range, "Order range A..B");
  bench->add_option("--algo", bench_args.algo, "Generator")->check(CLI::IsMember({"successor", "rcl", "both"}));
  bench->add_option("--repeat", bench_args.repeat, "Runs per order; the fastest is reported");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(gen, out, err);
    if (*bounds) return cmd_bounds(bounds_range, out);
    if (*verify) return cmd_verify(ver, out);
    if (*tree) return cmd_tree(tree_n, tree_dot, out);
    if (*extend) return cmd_extend(ext, out);
    if (*optimum) return cmd_optimum(opt_n, out);
    if (*bench) return cmd_bench(bench_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedSize& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace orientable::cli
