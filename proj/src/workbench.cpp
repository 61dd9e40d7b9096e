#include "trie_runs/workbench.hpp"

#include <sys/resource.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "trie_runs/trie_io.hpp"

namespace trie_runs::workbench {

CommonSuffixTrie load_trie(std::string_view text, InputFormat format,
                           Direction direction) {
  if (format == InputFormat::kAuto) {
    const auto first = text.substr(0, text.find('\n'));
    format = first.starts_with("child\tparent\tlabel") ? InputFormat::kEdges
                                                       : InputFormat::kStrings;
  }
  if (format == InputFormat::kEdges) {
    return CommonSuffixTrie::from_edges(parse_edge_list(text));
  }
  return CommonSuffixTrie::from_strings(parse_string_set(text), direction);
}

nlohmann::json runs_to_json(const std::vector<RunRecord>& runs) {
  auto arr = nlohmann::json::array();
  for (const auto& r : runs) {
    const auto e = r.exponent();
    arr.push_back({{"deep", r.deep},
                   {"shallow", r.shallow},
                   {"period", r.period},
                   {"length", r.length},
                   {"exponent_num", e.num},
                   {"exponent_den", e.den}});
  }
  return arr;
}

nlohmann::json stats_to_json(const RunStats& s) {
  auto hist = nlohmann::json::array();
  for (const auto& [period, count] : s.period_histogram) {
    hist.push_back({{"period", period}, {"count", count}});
  }
  return {{"count", s.count},
          {"edge_count", s.edge_count},
          {"sum_exponents", to_string(s.sum_exponents)},
          {"sum_floor_exponent_minus_one", s.sum_floor_exponent_minus_one},
          {"max_exponent", s.max_exponent.str()},
          {"period_histogram", hist}};
}

std::string count_summary(const std::vector<Confirmation>& confirmations) {
  std::ostringstream os;
  os << confirmations.size() << (confirmations.size() == 1 ? " run" : " runs");
  if (!confirmations.empty()) {
    os << "; shallow endpoints: [";
    for (std::size_t i = 0; i < confirmations.size(); ++i) {
      const auto& c = confirmations[i];
      if (i) os << ", ";
      os << "(";
      if (c.shallow == kRoot) {
        os << "root";
      } else {
        os << c.shallow;
      }
      os << ", p=" << c.period << ")";
    }
    os << "]";
  }
  return os.str();
}

long peak_rss_kb() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return usage.ru_maxrss;
}

unsigned parallel_threads() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("TRIE_RUNS_THREADS")) {
    try {
      const long value = std::stol(cap);
      if (value >= 1) threads = std::min<unsigned>(threads, static_cast<unsigned>(value));
    } catch (const std::exception&) {
      // ignore malformed caps
    }
  }
  return threads;
}

BenchRow bench_one(GeneratorSpec spec, std::uint32_t n, unsigned threads) {
  using clock = std::chrono::steady_clock;
  spec.size = n;
  auto trie = generate(spec);
  BenchRow row;
  row.n = n;
  row.edges = trie.edge_count();
  const auto start = clock::now();
  TrieIndex index(std::move(trie), &row.build);
  const auto runs_start = clock::now();
  row.candidates = 2 * (index.trie().num_nodes() - 1);
  const auto runs = enumerate_runs(index, EnumerateOptions{threads});
  const auto end = clock::now();
  row.runs_time = end - runs_start;
  row.total = end - start;
  const auto stats = run_stats(runs, index.trie());
  row.runs = stats.count;
  row.sum_exponents = stats.sum_exponents;
  row.lroot_sum = stats.sum_floor_exponent_minus_one;
  row.peak_rss_kb = peak_rss_kb();
  return row;
}

std::string bench_header() {
  return "n\tedges\torders_us\tsuffix_order_us\tlyndon_us\tgrid_us\truns_us\t"
         "total_us\ttime_ratio\tcandidates\truns\truns_per_edge\tsum_exponents\t"
         "lroot_sum\tlroot_bound\tpeak_rss_kb\n";
}

std::string bench_line(const BenchRow& r, const BenchRow* previous) {
  auto us = [](std::chrono::nanoseconds d) {
    return std::to_string(std::chrono::duration_cast<std::chrono::microseconds>(d).count());
  };
  std::string ratio = "-";
  if (previous && previous->total.count() > 0) {
    // Integer permille keeps the table free of floating point.
    ratio = std::to_string(r.total.count() * 1000 / previous->total.count()) + "/1000";
  }
  std::ostringstream os;
  os << r.n << '\t' << r.edges << '\t' << us(r.build.orders) << '\t'
     << us(r.build.suffix_order) << '\t' << us(r.build.lyndon) << '\t'
     << us(r.build.grid) << '\t' << us(r.runs_time) << '\t' << us(r.total) << '\t'
     << ratio << '\t' << r.candidates << '\t' << r.runs << '\t' << r.runs << '/'
     << r.edges << '\t' << to_string(r.sum_exponents) << '\t' << r.lroot_sum << '\t'
     << 2 * (static_cast<std::uint64_t>(r.n) - 1) << '\t' << r.peak_rss_kb << '\n';
  return os.str();
}

namespace {

struct InputOptions {
  std::string input = "-";
  std::string format = "auto";
  std::string direction = "rootward";
};

struct OutputSink {
  std::ostream& fallback;
  std::string path;

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      fallback << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError(0, "cannot open output file '" + path + "'");
    f << text;
  }
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError(0, "cannot open input file '" + path + "'");
  ss << f.rdbuf();
  return ss.str();
}

void add_input_options(CLI::App* cmd, InputOptions& opts) {
  cmd->add_option("--input,-i", opts.input, "input file ('-' for stdin)");
  cmd->add_option("--format", opts.format, "strings | edges | auto")
      ->check(CLI::IsMember({"auto", "strings", "edges"}));
  cmd->add_option("--direction", opts.direction, "rootward | leafward")
      ->check(CLI::IsMember({"rootward", "leafward"}));
}

CommonSuffixTrie load(const InputOptions& opts) {
  const auto text = read_input(opts.input);
  const auto format = opts.format == "strings" ? InputFormat::kStrings
                      : opts.format == "edges" ? InputFormat::kEdges
                                               : InputFormat::kAuto;
  const auto direction =
      opts.direction == "leafward" ? Direction::kLeafward : Direction::kRootward;
  return load_trie(text, format, direction);
}

void add_generator_options(CLI::App* cmd, GeneratorSpec& spec, std::string& kind) {
  cmd->add_option("--kind", kind, "random | path | fibonacci-path | thue-morse-path | caterpillar")
      ->check(CLI::IsMember({"random", "path", "fibonacci-path", "thue-morse-path",
                             "caterpillar"}));
  cmd->add_option("--alphabet", spec.alphabet, "alphabet size");
  cmd->add_option("--branching", spec.branching, "branching probability in [0,1]");
  cmd->add_option("--seed", spec.seed, "64-bit seed");
}

std::string tsv_suffix_order(const TrieIndex& index) {
  std::ostringstream os;
  os << "rank\tnode\tlcp0\n";
  const auto& so = index.suffixes();
  for (std::uint32_t r = 1; r <= so.size(); ++r) {
    os << r << '\t' << so.sa0(r) << '\t' << so.lcp0(r) << '\n';
  }
  return os.str();
}

std::string tsv_lyndon(const TrieIndex& index) {
  std::ostringstream os;
  os << "node\tisa0\tnsv0\tllen0\tnsv1\tllen1\n";
  const auto& ly = index.lyndon();
  for (NodeId v = 1; v <= index.trie().num_nodes(); ++v) {
    os << v << '\t' << index.suffixes().isa0(v) << '\t' << ly.nsv[0][v] << '\t'
       << ly.llen[0][v] << '\t' << ly.nsv[1][v] << '\t' << ly.llen[1][v] << '\n';
  }
  return os.str();
}

std::string stats_line(const RunStats& s) {
  return "runs: " + std::to_string(s.count) + ", edges: " + std::to_string(s.edge_count) +
         ", sum_exponents: " + to_string(s.sum_exponents) +
         ", max_exponent: " + s.max_exponent.str() + "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Runs (maximal repetitions) on common-suffix tries", "trie-runs"};
  app.require_subcommand(1);

  InputOptions in;
  std::string output;
  bool parallel = false;
  GeneratorSpec spec;
  std::string kind = "random";
  std::vector<std::uint32_t> sizes{1000, 10000, 100000};
  bool dump_suffix = false;
  bool dump_lyndon = false;
  std::optional<std::size_t> highlight;
  std::uint64_t max_ratio_permille = 12000;

  auto* gen = app.add_subcommand("gen", "write a synthetic trie as an edge list");
  add_generator_options(gen, spec, kind);
  gen->add_option("--size", spec.size, "node count");
  gen->add_option("--output,-o", output, "output file");

  auto* runs = app.add_subcommand("runs", "enumerate all runs as JSON");
  add_input_options(runs, in);
  runs->add_option("--output,-o", output, "output file");
  runs->add_flag("--parallel", parallel, "confirm candidates on several threads");

  auto* count = app.add_subcommand("count", "count runs and list shallow endpoints");
  add_input_options(count, in);
  count->add_flag("--parallel", parallel, "confirm candidates on several threads");

  auto* stats = app.add_subcommand("stats", "run statistics and debug tables");
  add_input_options(stats, in);
  stats->add_flag("--dump-suffix", dump_suffix, "emit rank/node/lcp0 TSV");
  stats->add_flag("--dump-lyndon", dump_lyndon, "emit the Lyndon table TSV");
  stats->add_option("--output,-o", output, "output file");

  auto* bench = app.add_subcommand("bench", "time the pipeline on generated tries");
  add_generator_options(bench, spec, kind);
  bench->add_option("--sizes", sizes, "ascending node counts")->delimiter(',');
  bench->add_option("--max-ratio-permille", max_ratio_permille,
                    "advisory cap on time growth between rows (x1000)");
  std::string thresholds;
  bench->add_option("--thresholds", thresholds,
                    "JSON file with calibrated advisory limits");
  bench->add_flag("--parallel", parallel, "confirm candidates on several threads");
  bench->add_option("--output,-o", output, "output file");

  auto* dot = app.add_subcommand("export-dot", "write the trie as Graphviz DOT");
  add_input_options(dot, in);
  dot->add_option("--highlight", highlight, "index of a run to mark");
  dot->add_option("--output,-o", output, "output file");

  std::vector<const char*> argv{"trie-runs"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  const OutputSink sink{out, output};
  const EnumerateOptions options{parallel ? parallel_threads() : 1u};
  try {
    if (*gen) {
      spec.kind = *parse_generator_kind(kind);
      sink.write(write_edge_list(generate(spec)));
    } else if (*runs) {
      TrieIndex index(load(in));
      const auto found = enumerate_runs(index, options);
      sink.write(runs_to_json(found).dump(2) + "\n");
      (output.empty() || output == "-" ? err : out)
          << stats_line(run_stats(found, index.trie()));
    } else if (*count) {
      TrieIndex index(load(in));
      out << count_summary(count_runs(index, options)) << "\n";
    } else if (*stats) {
      TrieIndex index(load(in));
      std::string text;
      if (dump_suffix) text += tsv_suffix_order(index);
      if (dump_lyndon) text += tsv_lyndon(index);
      if (!dump_suffix && !dump_lyndon) {
        text = stats_to_json(run_stats(enumerate_runs(index, options), index.trie()))
                   .dump(2) + "\n";
      }
      sink.write(text);
    } else if (*bench) {
      spec.kind = *parse_generator_kind(kind);
      if (!std::is_sorted(sizes.begin(), sizes.end())) {
        throw ParseError(0, "--sizes must be ascending");
      }
      if (!thresholds.empty()) {
        const auto cfg = nlohmann::json::parse(read_input(thresholds), nullptr, false);
        if (cfg.is_discarded() || !cfg.contains("bench_max_ratio_permille")) {
          throw ParseError(0, "thresholds file lacks bench_max_ratio_permille");
        }
        max_ratio_permille = cfg["bench_max_ratio_permille"].get<std::uint64_t>();
      }
      std::string table = bench_header();
      std::optional<BenchRow> prev;
      for (auto n : sizes) {
        const auto row = bench_one(spec, n, options.threads);
        table += bench_line(row, prev ? &*prev : nullptr);
        // Trie edges exclude the auxiliary edge above the root.
        if (row.edges >= 2 && row.runs >= row.edges - 1) {
          err << "violation: runs >= trie edges at n=" << n << "\n";
          sink.write(table);
          return kInternalAssertion;
        }
        if (row.lroot_sum > 2 * static_cast<std::uint64_t>(n)) {
          err << "violation: L-root sum exceeds 2n at n=" << n << "\n";
          sink.write(table);
          return kInternalAssertion;
        }
        if (prev && prev->total.count() > 0 &&
            static_cast<std::uint64_t>(row.total.count()) * 1000 >
                max_ratio_permille * static_cast<std::uint64_t>(prev->total.count())) {
          err << "advisory: time ratio above " << max_ratio_permille
              << "/1000 at n=" << n << "\n";
        }
        prev = row;
      }
      sink.write(table);
    } else if (*dot) {
      TrieIndex index(load(in));
      std::optional<DotHighlight> mark;
      if (highlight) {
        const auto found = enumerate_runs(index, options);
        if (*highlight >= found.size()) {
          err << "error: run index " << *highlight << " out of range (" << found.size()
              << " runs)\n";
          return kParseError;
        }
        const auto& r = found[*highlight];
        mark = DotHighlight{r.deep, r.shallow, r.period};
      }
      sink.write(write_dot(index.trie(), mark));
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const TrieInvariantError& e) {
    err << "invalid trie: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const DuplicateRunError& e) {
    err << "internal assertion: " << e.what() << "\n";
    return kInternalAssertion;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}

}  // namespace trie_runs::workbench
