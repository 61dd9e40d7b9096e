#pragma once

#include <cstdint>
#include <vector>

#include "trie_runs/trie.hpp"

namespace trie_runs {

/// Sparse table answering range-minimum queries in O(1).
class RangeMin {
 public:
  RangeMin() = default;
  explicit RangeMin(std::vector<std::uint32_t> values);

  /// Minimum over values[first..last], inclusive; requires first <= last.
  std::uint32_t min(std::size_t first, std::size_t last) const;

 private:
  std::vector<std::vector<std::uint32_t>> table_;
};

/// Lexicographic ranks of every node suffix.
///
/// Order 0 compares labels as integers with the sentinel largest; order 1
/// reverses the alphabet, which makes the sentinel smallest. Because no node
/// suffix is a proper prefix of another, order 1 is exactly order 0 reversed.
class SuffixOrder {
 public:
  SuffixOrder() = default;

  static SuffixOrder build(const CommonSuffixTrie& trie);

  std::size_t size() const { return sa0_.size() - 1; }

  /// Rank in [1, N] under the chosen order.
  std::uint32_t rank(int order, NodeId v) const {
    return order == 0 ? isa0_[v] : static_cast<std::uint32_t>(size()) + 1 - isa0_[v];
  }
  std::uint32_t isa0(NodeId v) const { return isa0_[v]; }
  std::uint32_t isa1(NodeId v) const { return rank(1, v); }
  /// Node holding rank r under order 0.
  NodeId sa0(std::uint32_t r) const { return sa0_[r]; }
  /// lcp0[r] = |LCP(suf(sa0[r-1]), suf(sa0[r]))| for r in [2, N]; lcp0[1] = 0.
  std::uint32_t lcp0(std::uint32_t r) const { return lcp0_[r]; }

  /// Longest common prefix of suf(u) and suf(v), u != v.
  std::uint32_t lce_to_root(NodeId u, NodeId v) const;

  /// Number of doubling rounds used by construction.
  std::size_t rounds() const { return rounds_; }

 private:
  std::vector<std::uint32_t> isa0_;
  std::vector<NodeId> sa0_;
  std::vector<std::uint32_t> lcp0_;
  RangeMin rmq_;
  std::size_t rounds_ = 0;
};

}  // namespace trie_runs
