#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "trie_runs/lyndon.hpp"
#include "trie_runs/range_index.hpp"
#include "trie_runs/suffix_order.hpp"
#include "trie_runs/trie.hpp"

namespace trie_runs {

using BigRational = boost::multiprecision::cpp_rational;

/// Raised when two candidates confirm the same run.
class DuplicateRunError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Reduced non-negative fraction.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational make(std::uint64_t num, std::uint64_t den) {
    const auto g = std::gcd(num, den);
    return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
  }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<unsigned __int128>(a.num) * b.den <
           static_cast<unsigned __int128>(b.num) * a.den;
  }
};

std::string to_string(const BigRational& r);

/// Wall time per construction stage, filled by TrieIndex when requested.
struct BuildTimings {
  std::chrono::nanoseconds orders{0};
  std::chrono::nanoseconds suffix_order{0};
  std::chrono::nanoseconds lyndon{0};
  std::chrono::nanoseconds grid{0};
};

/// Every structure the run computation reads, built once from a trie.
/// Non-movable: the grid keeps a pointer to the suffix order.
class TrieIndex {
 public:
  explicit TrieIndex(CommonSuffixTrie trie, BuildTimings* timings = nullptr);
  TrieIndex(const TrieIndex&) = delete;
  TrieIndex& operator=(const TrieIndex&) = delete;

  const CommonSuffixTrie& trie() const { return trie_; }
  const NodeOrders& orders() const { return orders_; }
  const SuffixOrder& suffixes() const { return suffixes_; }
  const LyndonTable& lyndon() const { return lyndon_; }
  const GridIndex& grid() const { return grid_; }

 private:
  CommonSuffixTrie trie_;
  NodeOrders orders_;
  SuffixOrder suffixes_;
  LyndonTable lyndon_;
  GridIndex grid_;
};

/// A potential L-root occurrence: str(deep, shallow) is the longest Lyndon
/// prefix of suf(deep) under `order`.
struct Candidate {
  NodeId deep = kBottom;
  NodeId shallow = kBottom;
  std::uint32_t period = 0;
  int order = 0;
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Shallow endpoint of a confirmed run plus the node 2p edges below it on the
/// run's path.
struct Confirmation {
  NodeId shallow = kBottom;
  NodeId anchor = kBottom;
  std::uint32_t period = 0;
  friend bool operator==(const Confirmation&, const Confirmation&) = default;
};

struct RunRecord {
  NodeId deep = kBottom;
  NodeId shallow = kBottom;
  std::uint32_t period = 0;
  std::uint32_t length = 0;

  Rational exponent() const { return Rational::make(length, period); }
  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

struct EnumerateOptions {
  /// Worker threads for candidate confirmation; 1 means sequential.
  unsigned threads = 1;
};

/// One candidate per (node other than root, order), ordered by order-0 rank
/// then order.
std::vector<Candidate> collect_candidates(const TrieIndex& index);

/// Checks whether the candidate is the topmost L-root occurrence of a run and
/// whether the periodicity reaches twice the period below the run's top.
std::optional<Confirmation> try_confirm_run(const TrieIndex& index,
                                            const Candidate& c);

/// Follows the period toward the leaves from a confirmed anchor and returns
/// the run's deep endpoint.
NodeId extend_to_deep_endpoint(const TrieIndex& index, NodeId shallow,
                               NodeId anchor, std::uint32_t period);

/// Confirmations only: one (shallow, anchor, period) per run, sorted by
/// (sdepth(shallow), rank(shallow), period, rank(anchor)).
std::vector<Confirmation> count_runs(const TrieIndex& index,
                                     const EnumerateOptions& options = {});

/// All runs, sorted by (sdepth(shallow), rank(shallow), rank(deep)).
/// Throws DuplicateRunError if a run is confirmed twice.
std::vector<RunRecord> enumerate_runs(const TrieIndex& index,
                                      const EnumerateOptions& options = {});

struct RunStats {
  std::size_t count = 0;
  std::size_t edge_count = 0;
  BigRational sum_exponents = 0;
  /// Sum over runs of max(floor(e) - 1, 1).
  std::uint64_t sum_floor_exponent_minus_one = 0;
  Rational max_exponent{0, 1};
  std::map<std::uint32_t, std::size_t> period_histogram;
};

RunStats run_stats(const std::vector<RunRecord>& runs,
                   const CommonSuffixTrie& trie);

}  // namespace trie_runs
