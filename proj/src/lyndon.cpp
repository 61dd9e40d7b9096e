#include "trie_runs/lyndon.hpp"

#include <stdexcept>
#include <string>

namespace trie_runs {

NearestMarkedAncestor::NearestMarkedAncestor(std::span<const NodeId> parent)
    : parent_(parent),
      link_(parent.size()),
      rank_(parent.size(), 0),
      top_(parent.size()),
      marked_(parent.size(), 1) {
  for (std::uint32_t v = 0; v < parent.size(); ++v) {
    link_[v] = v;
    top_[v] = v;
  }
}

std::uint32_t NearestMarkedAncestor::find(std::uint32_t x) {
  std::uint32_t root = x;
  while (link_[root] != root) root = link_[root];
  while (link_[x] != root) {
    const auto next = link_[x];
    link_[x] = root;
    x = next;
  }
  return root;
}

NodeId NearestMarkedAncestor::nma(NodeId v) {
  return top_[find(parent_[v])];
}

void NearestMarkedAncestor::unmark(NodeId v) {
  if (v == kBottom) throw std::invalid_argument("bottom cannot be unmarked");
  if (!marked_[v]) {
    throw std::invalid_argument("node " + std::to_string(v) +
                                " is already unmarked");
  }
  marked_[v] = 0;
  auto a = find(v);
  auto b = find(parent_[v]);
  const NodeId anchor = top_[b];
  if (rank_[a] < rank_[b]) std::swap(a, b);
  link_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  top_[a] = anchor;
}

LyndonTable::Prefix LyndonTable::longest_lyndon_prefix(NodeId v,
                                                        int order) const {
  if (v == kBottom || v == kRoot || v >= nsv[0].size()) {
    throw std::invalid_argument("longest Lyndon prefix undefined for node " +
                                std::to_string(v));
  }
  return {nsv[order][v], llen[order][v]};
}

void compute_nsv_all(const CommonSuffixTrie& trie, const SuffixOrder& order,
                     int which, LyndonTable& table) {
  const auto n = static_cast<std::uint32_t>(trie.num_nodes());
  auto& nsv = table.nsv[which];
  auto& llen = table.llen[which];
  nsv.assign(n + 1, kBottom);
  llen.assign(n + 1, 0);

  NearestMarkedAncestor marks(trie.parents());
  // Rank r under order 1 is rank N+1-r under order 0.
  for (std::uint32_t step = 0; step < n; ++step) {
    const std::uint32_t r0 = which == 0 ? n - step : step + 1;
    const NodeId v = order.sa0(r0);
    marks.unmark(v);
    nsv[v] = marks.nma(v);
    llen[v] = trie.sdepth(v) - trie.sdepth(nsv[v]);
  }
}

LyndonTable build_lyndon_table(const CommonSuffixTrie& trie,
                               const SuffixOrder& order) {
  LyndonTable table;
  compute_nsv_all(trie, order, 0, table);
  compute_nsv_all(trie, order, 1, table);
  return table;
}

}  // namespace trie_runs
