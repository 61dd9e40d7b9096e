#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "trie_runs/generators.hpp"
#include "trie_runs/runs.hpp"
#include "trie_runs/trie.hpp"

namespace trie_runs::workbench {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kInvariantViolation = 3,
  kInternalAssertion = 4,
};

enum class InputFormat { kAuto, kStrings, kEdges };

/// Builds a trie from file contents. Auto picks the edge-list reader when the
/// first line is the edge-list header.
CommonSuffixTrie load_trie(std::string_view text, InputFormat format,
                           Direction direction);

nlohmann::json runs_to_json(const std::vector<RunRecord>& runs);
nlohmann::json stats_to_json(const RunStats& stats);

/// "1 run; shallow endpoints: [(root, p=2)]"
std::string count_summary(const std::vector<Confirmation>& confirmations);

struct BenchRow {
  std::uint32_t n = 0;
  BuildTimings build;
  std::chrono::nanoseconds runs_time{0};
  std::chrono::nanoseconds total{0};
  std::size_t candidates = 0;
  std::size_t runs = 0;
  std::size_t edges = 0;
  BigRational sum_exponents = 0;
  std::uint64_t lroot_sum = 0;
  long peak_rss_kb = 0;
};

/// Generates a trie of each size from `spec` and times the whole pipeline.
BenchRow bench_one(GeneratorSpec spec, std::uint32_t n, unsigned threads = 1);
std::string bench_header();
std::string bench_line(const BenchRow& row, const BenchRow* previous);

/// Peak resident set size of this process in KiB.
long peak_rss_kb();

/// Worker threads for --parallel: hardware concurrency, capped by the
/// TRIE_RUNS_THREADS environment variable.
unsigned parallel_threads();

/// Full command line front end; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace trie_runs::workbench
