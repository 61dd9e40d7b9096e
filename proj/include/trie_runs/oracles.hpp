#pragma once

// Brute-force reference implementations. Everything here works from the
// definitions on materialized strings and parent links; nothing from the
// production index (suffix order, Lyndon table, grid, runs engine) is used.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trie_runs/trie.hpp"

namespace trie_runs::oracle {

/// Maximal repetition [start, end] (1-based, inclusive) of a string.
struct StringRun {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t period = 0;
  friend auto operator<=>(const StringRun&, const StringRun&) = default;
};

/// Run on a trie as a node pair with its smallest period and path length.
struct TrieRun {
  NodeId deep = kBottom;
  NodeId shallow = kBottom;
  std::uint32_t period = 0;
  std::uint32_t length = 0;
  friend auto operator<=>(const TrieRun&, const TrieRun&) = default;
};

/// Smallest period of w (|w| for a border-free word, 0 for the empty word).
std::size_t smallest_period(std::span<const Symbol> w);

/// True iff w is strictly smaller than each of its proper suffixes, comparing
/// symbols ascending (order 0) or descending (order 1).
bool is_lyndon(std::span<const Symbol> w, int order);

/// Lexicographic comparison under order 0 (ascending) or 1 (descending).
bool lex_less(std::span<const Symbol> a, std::span<const Symbol> b, int order);

/// All maximal repetitions of w, sorted.
std::vector<StringRun> string_runs_bruteforce(std::span<const Symbol> w);

/// Next smaller value by back-pointer chasing. Input A[1..n] is stored as
/// a[0..n-1]; result[i-1] is the 1-based NSV of position i, with n+1 when no
/// smaller value follows.
std::vector<std::size_t> string_nsv_reference(std::span<const std::int64_t> a);
/// Same contract by a plain rightward scan.
std::vector<std::size_t> naive_nsv_scan(std::span<const std::int64_t> a);

/// Rank (1-based) of each suffix w[i..]·sentinel, comparing symbols as
/// integers; result[i] is the rank of the suffix starting at 1-based i.
std::vector<std::uint32_t> string_inverse_suffix_array(std::span<const Symbol> w,
                                                       Symbol sentinel);

/// Every run of the trie, sorted, by exhaustive ancestor/descendant scan.
std::vector<TrieRun> trie_runs_bruteforce(const CommonSuffixTrie& trie);

/// Rank (1-based) of every node suffix under the given order; slot 0 unused.
std::vector<std::uint32_t> naive_suffix_ranks(const CommonSuffixTrie& trie,
                                              int order);

/// Longest common prefix of suf(u) and suf(v) by walking parent links.
std::uint32_t naive_lcp(const CommonSuffixTrie& trie, NodeId u, NodeId v);

/// Nearest strict ancestor with a smaller rank (bottom if none).
std::vector<NodeId> naive_nsv_on_trie(const CommonSuffixTrie& trie,
                                      std::span<const std::uint32_t> ranks);

struct NaiveOrders {
  std::vector<std::uint32_t> pre;
  std::vector<std::uint32_t> post;
  std::vector<std::uint32_t> bfs_pos;
};
/// Recursive traversal visiting children by ascending label.
NaiveOrders naive_node_orders(const CommonSuffixTrie& trie);

struct NaivePoint {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  friend bool operator==(const NaivePoint&, const NaivePoint&) = default;
};
/// ys[1..n]; scan [x1, x2] for the largest y' <= y (pred) / smallest y' >= y.
std::optional<NaivePoint> naive_range_pred(std::span<const std::uint32_t> ys,
                                           std::uint32_t x1, std::uint32_t x2,
                                           std::uint64_t y);
std::optional<NaivePoint> naive_range_succ(std::span<const std::uint32_t> ys,
                                           std::uint32_t x1, std::uint32_t x2,
                                           std::uint64_t y);

/// Descendants of v with sdepth d, in preorder.
std::vector<NodeId> naive_descendants_at_depth(const CommonSuffixTrie& trie,
                                               NodeId v, std::uint32_t d);

struct NaiveDown {
  std::uint32_t lcp = 0;
  std::vector<NodeId> attaining;
};
/// Best LCP with suf(v) over descendants at sdepth d, and all nodes attaining it.
std::optional<NaiveDown> naive_lce_down(const CommonSuffixTrie& trie, NodeId v,
                                        std::uint32_t d);

/// Per-structure outcome of an oracle comparison.
struct OracleCheck {
  std::string structure;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;
  /// Edge-list TSV of the smallest failing trie found.
  std::string reproducer;
};

class OracleReport {
 public:
  /// Runs `check` over a trie; on failure the trie is shrunk by deleting
  /// leaves while `check` keeps failing, and the result is recorded.
  void run(const std::string& structure, const CommonSuffixTrie& trie,
           const std::function<std::optional<std::string>(const CommonSuffixTrie&)>& check);

  bool passed() const;
  const std::vector<OracleCheck>& checks() const { return checks_; }

 private:
  OracleCheck& entry(const std::string& structure);
  std::vector<OracleCheck> checks_;
};

/// Greedy leaf deletion while `fails` holds.
CommonSuffixTrie shrink_counterexample(
    const CommonSuffixTrie& trie,
    const std::function<bool(const CommonSuffixTrie&)>& fails);

}  // namespace trie_runs::oracle
