#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trie_runs {

/// Dense node index. 0 is the auxiliary parent of the root, 1 is the root,
/// real nodes are numbered 1..N in preorder (children visited by ascending label).
using NodeId = std::uint32_t;
using Symbol = std::uint32_t;

inline constexpr NodeId kBottom = 0;
inline constexpr NodeId kRoot = 1;

/// Largest value a regular label may take; the value itself is reserved.
inline constexpr Symbol kReservedSymbol = 0xFFFFFFFFu;

enum class Direction {
  kLeafward,  // strings spell root -> leaf
  kRootward,  // strings spell leaf -> root
};

/// Thrown when input data does not describe a valid trie.
class TrieInvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One row of an edge list. parent == std::nullopt marks the root row.
struct EdgeRow {
  std::int64_t child = 0;
  std::optional<std::int64_t> parent;
  Symbol label = 0;
};

/// Rooted edge-labeled tree read toward the root. Every node v owns the
/// suffix suf(v): the labels from v up to the auxiliary bottom node, the last
/// of which is a sentinel symbol that occurs nowhere else.
///
/// Immutable after construction.
class CommonSuffixTrie {
 public:
  CommonSuffixTrie() = default;

  static CommonSuffixTrie from_strings(
      std::span<const std::vector<Symbol>> strings,
      Direction direction = Direction::kRootward);
  static CommonSuffixTrie from_edges(std::span<const EdgeRow> rows);

  /// Number of real nodes N; ids run 1..N.
  std::size_t num_nodes() const { return parent_.size() - 1; }
  /// Trie edges including the edge from the root to bottom; equals N.
  std::size_t edge_count() const { return num_nodes(); }

  NodeId parent(NodeId v) const { return parent_[v]; }
  Symbol in_label(NodeId v) const { return label_[v]; }
  Symbol sentinel() const { return sentinel_; }

  /// Edges from v to bottom (0 for bottom, 1 for the root).
  std::uint32_t sdepth(NodeId v) const { return sdepth_[v]; }
  std::uint32_t max_sdepth() const { return max_sdepth_; }

  /// Children sorted by ascending label (and therefore by ascending id).
  std::span<const NodeId> children(NodeId v) const {
    return {child_list_.data() + child_begin_[v],
            child_list_.data() + child_begin_[v + 1]};
  }
  std::optional<NodeId> child(NodeId v, Symbol label) const;

  std::uint32_t subtree_size(NodeId v) const { return subtree_size_[v]; }

  /// The ancestor exactly k edges above v; k == sdepth(v) yields bottom.
  NodeId ancestor_at(NodeId v, std::uint32_t k) const;
  /// i-th symbol of suf(v), 1-based.
  Symbol suffix_char(NodeId v, std::uint32_t i) const;
  /// Materializes suf(v), sentinel included.
  std::vector<Symbol> suffix(NodeId v) const;

  /// Identifier the node carried in the input (edge lists), or its dense id.
  std::int64_t original_id(NodeId v) const { return original_id_[v]; }

  /// Raw views, indexed by NodeId (slot 0 is bottom).
  std::span<const NodeId> parents() const { return parent_; }
  std::span<const Symbol> labels() const { return label_; }
  std::span<const std::uint32_t> sdepths() const { return sdepth_; }

  /// Binary lifting table row k: jump of 2^k edges (bottom maps to bottom).
  std::span<const NodeId> jump_table(std::size_t k) const { return jump_[k]; }
  std::size_t jump_levels() const { return jump_.size(); }

 private:
  // Builds the dense preorder trie from temporary nodes; temp_parent uses
  // -1 for the root.
  static CommonSuffixTrie finalize(std::vector<std::int64_t> temp_parent,
                                   std::vector<Symbol> temp_label,
                                   std::vector<std::int64_t> temp_original);

  std::vector<NodeId> parent_;
  std::vector<Symbol> label_;
  std::vector<std::uint32_t> sdepth_;
  std::vector<std::uint32_t> child_begin_;
  std::vector<NodeId> child_list_;
  std::vector<std::uint32_t> subtree_size_;
  std::vector<std::int64_t> original_id_;
  std::vector<std::vector<NodeId>> jump_;
  Symbol sentinel_ = 0;
  std::uint32_t max_sdepth_ = 0;
};

/// Depth interval [first, last] of bfs positions (1-based, inclusive).
struct BfsInterval {
  std::uint32_t first = 1;
  std::uint32_t last = 0;

  bool empty() const { return first > last; }
  std::uint32_t size() const { return empty() ? 0 : last - first + 1; }
  friend bool operator==(const BfsInterval&, const BfsInterval&) = default;
};

/// Node orders used by the depth-constrained extension queries. Positions and
/// ranks are 1-based; index 0 of each per-node array is unused (bottom).
struct NodeOrders {
  std::vector<std::uint32_t> bfs_pos;
  std::vector<NodeId> bfs_node;  // bfs_node[x] = node at position x
  std::vector<std::uint32_t> pre;
  std::vector<std::uint32_t> post;
  /// depth_interval[d] for sdepth d in 1..max_sdepth; entry 0 is empty.
  std::vector<BfsInterval> depth_interval;

  BfsInterval interval_at(std::uint32_t sdepth) const {
    if (sdepth == 0 || sdepth >= depth_interval.size()) return {};
    return depth_interval[sdepth];
  }
};

NodeOrders compute_orders(const CommonSuffixTrie& trie);

}  // namespace trie_runs
