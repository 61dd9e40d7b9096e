#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "trie_runs/suffix_order.hpp"
#include "trie_runs/trie.hpp"

namespace trie_runs {

/// Decremental nearest marked ancestor over a tree given by parent links
/// (slot 0 is bottom, which stays marked forever). Every node starts marked.
///
/// Unmarking a node merges its set into its parent's; each set remembers its
/// topmost member, which is the only marked node in it. Union by rank plus
/// path compression gives amortized inverse-Ackermann cost per operation.
class NearestMarkedAncestor {
 public:
  explicit NearestMarkedAncestor(std::span<const NodeId> parent);

  /// Nearest marked strict ancestor of v (v != bottom).
  NodeId nma(NodeId v);
  /// Throws std::invalid_argument on bottom or on an already unmarked node.
  void unmark(NodeId v);
  bool marked(NodeId v) const { return marked_[v] != 0; }

 private:
  std::uint32_t find(std::uint32_t x);

  std::span<const NodeId> parent_;
  std::vector<std::uint32_t> link_;
  std::vector<std::uint8_t> rank_;
  std::vector<NodeId> top_;
  std::vector<std::uint8_t> marked_;
};

/// Next-smaller-value ancestors under both orders and the resulting longest
/// Lyndon prefix lengths.
struct LyndonTable {
  std::array<std::vector<NodeId>, 2> nsv;
  std::array<std::vector<std::uint32_t>, 2> llen;

  struct Prefix {
    NodeId end;
    std::uint32_t length;
    friend bool operator==(const Prefix&, const Prefix&) = default;
  };

  /// Longest Lyndon prefix of suf(v) under `order`: its upper end node and
  /// length. Undefined for the root and bottom (throws std::invalid_argument).
  Prefix longest_lyndon_prefix(NodeId v, int order) const;
};

/// Fills nsv/llen for one order by visiting nodes in decreasing rank.
void compute_nsv_all(const CommonSuffixTrie& trie, const SuffixOrder& order,
                     int which, LyndonTable& table);

LyndonTable build_lyndon_table(const CommonSuffixTrie& trie,
                               const SuffixOrder& order);

}  // namespace trie_runs
