#include "trie_runs/range_index.hpp"

#include <stdexcept>
#include <string>

namespace trie_runs {

RangePredecessor::RangePredecessor(std::span<const std::uint32_t> ys)
    : y_of_(ys.begin(), ys.end()), x_of_(ys.size(), 0) {
  const std::size_t n = ys.size() - 1;
  std::vector<std::uint32_t> packed(n);
  for (std::uint32_t x = 1; x <= n; ++x) {
    if (ys[x] == 0 || ys[x] > n || x_of_[ys[x]] != 0) {
      throw std::invalid_argument("grid y-coordinates must be a permutation");
    }
    x_of_[ys[x]] = x;
    packed[x - 1] = ys[x];
  }
  wm_ = WaveletMatrix(packed);
}

void RangePredecessor::check(std::uint32_t x1, std::uint32_t x2) const {
  if (x1 < 1 || x1 > x2 || x2 > size()) {
    throw std::out_of_range("malformed interval [" + std::to_string(x1) + ", " +
                            std::to_string(x2) + "]");
  }
}

std::optional<GridPoint> RangePredecessor::pred(std::uint32_t x1,
                                                std::uint32_t x2,
                                                std::uint64_t y) const {
  check(x1, x2);
  const std::size_t at_most = wm_.count_less(x1 - 1, x2, y + 1);
  if (at_most == 0) return std::nullopt;
  const auto yv = wm_.kth_smallest(x1 - 1, x2, at_most - 1);
  return GridPoint{x_of_[yv], yv};
}

std::optional<GridPoint> RangePredecessor::succ(std::uint32_t x1,
                                                std::uint32_t x2,
                                                std::uint64_t y) const {
  check(x1, x2);
  const std::size_t below = wm_.count_less(x1 - 1, x2, y);
  if (below == std::size_t{x2} - x1 + 1) return std::nullopt;
  const auto yv = wm_.kth_smallest(x1 - 1, x2, below);
  return GridPoint{x_of_[yv], yv};
}

GridIndex::GridIndex(const CommonSuffixTrie& trie, const NodeOrders& orders,
                     const SuffixOrder& suffixes)
    : suffixes_(&suffixes),
      bfs_node_(orders.bfs_node),
      pre_(orders.pre),
      post_(orders.post),
      sdepth_(trie.sdepths().begin(), trie.sdepths().end()),
      depth_interval_(orders.depth_interval) {
  const auto n = static_cast<std::uint32_t>(trie.num_nodes());
  std::vector<std::uint32_t> ys(n + 1, 0);
  for (std::uint32_t x = 1; x <= n; ++x) ys[x] = orders.pre[bfs_node_[x]];
  seqs_[0] = RangePredecessor(ys);
  for (std::uint32_t x = 1; x <= n; ++x) ys[x] = orders.post[bfs_node_[x]];
  seqs_[1] = RangePredecessor(ys);
  for (std::uint32_t x = 1; x <= n; ++x) ys[x] = suffixes.isa0(bfs_node_[x]);
  seqs_[2] = RangePredecessor(ys);
}

BfsInterval GridIndex::descendants_at_depth(NodeId v, std::uint32_t d) const {
  if (v == kBottom || v >= sdepth_.size() || d <= sdepth_[v]) {
    throw std::out_of_range("descendants_at_depth: depth " + std::to_string(d) +
                            " is not below node " + std::to_string(v));
  }
  if (d >= depth_interval_.size()) return {};
  const auto level = depth_interval_[d];
  // Same-depth nodes are in preorder, which also orders them by postorder.
  const auto first = range_succ(GridSeq::kPreorder, level.first, level.last, pre_[v]);
  const auto last = range_pred(GridSeq::kPostorder, level.first, level.last, post_[v]);
  if (!first || !last || first->x > last->x) return {};
  return {first->x, last->x};
}

std::optional<DownMatch> GridIndex::lce_down(NodeId v, std::uint32_t d) const {
  const auto range = descendants_at_depth(v, d);
  if (range.empty()) return std::nullopt;
  const auto rank = suffixes_->isa0(v);
  const auto below = range_pred(GridSeq::kLexRank, range.first, range.last, rank);
  const auto above = range_succ(GridSeq::kLexRank, range.first, range.last, rank);

  std::optional<DownMatch> best;
  // `below` has the smaller rank, so checking it first settles ties.
  for (const auto& pt : {below, above}) {
    if (!pt) continue;
    const NodeId u = bfs_node_[pt->x];
    const auto lcp = suffixes_->lce_to_root(u, v);
    if (!best || lcp > best->lcp) best = DownMatch{u, lcp};
  }
  return best;
}

}  // namespace trie_runs
