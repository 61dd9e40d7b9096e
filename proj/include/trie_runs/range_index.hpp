#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "trie_runs/suffix_order.hpp"
#include "trie_runs/trie.hpp"
#include "trie_runs/wavelet_matrix.hpp"

namespace trie_runs {

/// Which y-coordinate a grid query runs against.
enum class GridSeq { kPreorder = 0, kPostorder = 1, kLexRank = 2 };

struct GridPoint {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// Result of a depth-constrained extension toward the leaves.
struct DownMatch {
  NodeId node = kBottom;
  std::uint32_t lcp = 0;
  friend bool operator==(const DownMatch&, const DownMatch&) = default;
};

/// Range predecessor/successor over a permutation y[1..n] of [1, n].
class RangePredecessor {
 public:
  RangePredecessor() = default;
  /// ys[0] is ignored; ys[1..n] must be a permutation of [1, n].
  explicit RangePredecessor(std::span<const std::uint32_t> ys);

  std::size_t size() const { return x_of_.size() - 1; }
  std::uint32_t y_at(std::uint32_t x) const { return y_of_[x]; }

  /// Point with x in [x1, x2] and the largest y' <= y.
  std::optional<GridPoint> pred(std::uint32_t x1, std::uint32_t x2,
                                std::uint64_t y) const;
  /// Point with x in [x1, x2] and the smallest y' >= y.
  std::optional<GridPoint> succ(std::uint32_t x1, std::uint32_t x2,
                                std::uint64_t y) const;

 private:
  void check(std::uint32_t x1, std::uint32_t x2) const;

  WaveletMatrix wm_;
  std::vector<std::uint32_t> y_of_;
  std::vector<std::uint32_t> x_of_;
};

/// Nodes on a grid: x is the bfs position (same-depth nodes in preorder), y is
/// one of preorder rank, postorder rank or the suffix rank under order 0.
class GridIndex {
 public:
  GridIndex() = default;
  GridIndex(const CommonSuffixTrie& trie, const NodeOrders& orders,
            const SuffixOrder& suffixes);

  std::optional<GridPoint> range_pred(GridSeq seq, std::uint32_t x1,
                                      std::uint32_t x2, std::uint64_t y) const {
    return seqs_[static_cast<int>(seq)].pred(x1, x2, y);
  }
  std::optional<GridPoint> range_succ(GridSeq seq, std::uint32_t x1,
                                      std::uint32_t x2, std::uint64_t y) const {
    return seqs_[static_cast<int>(seq)].succ(x1, x2, y);
  }
  const RangePredecessor& sequence(GridSeq seq) const {
    return seqs_[static_cast<int>(seq)];
  }

  NodeId node_at(std::uint32_t x) const { return bfs_node_[x]; }

  /// bfs interval holding the descendants of v at sdepth d (d > sdepth(v)).
  BfsInterval descendants_at_depth(NodeId v, std::uint32_t d) const;

  /// Among descendants of v at sdepth d, one whose suffix shares the longest
  /// prefix with suf(v); ties resolve to the smaller order-0 rank. Empty when
  /// v has no descendant at that depth.
  std::optional<DownMatch> lce_down(NodeId v, std::uint32_t d) const;

 private:
  const SuffixOrder* suffixes_ = nullptr;
  std::array<RangePredecessor, 3> seqs_;
  std::vector<NodeId> bfs_node_;
  std::vector<std::uint32_t> pre_;
  std::vector<std::uint32_t> post_;
  std::vector<std::uint32_t> sdepth_;
  std::vector<BfsInterval> depth_interval_;
};

}  // namespace trie_runs
