#include "trie_runs/suffix_order.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace trie_runs {

RangeMin::RangeMin(std::vector<std::uint32_t> values) {
  const std::size_t n = values.size();
  table_.push_back(std::move(values));
  for (std::size_t k = 1; (std::size_t{1} << k) <= n; ++k) {
    const auto& prev = table_[k - 1];
    const std::size_t half = std::size_t{1} << (k - 1);
    std::vector<std::uint32_t> cur(n - (std::size_t{1} << k) + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      cur[i] = std::min(prev[i], prev[i + half]);
    }
    table_.push_back(std::move(cur));
  }
}

std::uint32_t RangeMin::min(std::size_t first, std::size_t last) const {
  const std::size_t k = std::bit_width(last - first + 1) - 1;
  return std::min(table_[k][first], table_[k][last + 1 - (std::size_t{1} << k)]);
}

namespace {

// Stable counting sort of `items` by key(item) in [0, buckets).
template <typename Key>
void counting_sort(std::vector<NodeId>& items, std::vector<NodeId>& scratch,
                   std::size_t buckets, Key key) {
  std::vector<std::uint32_t> count(buckets + 1, 0);
  for (NodeId v : items) ++count[key(v) + 1];
  for (std::size_t i = 0; i < buckets; ++i) count[i + 1] += count[i];
  scratch.resize(items.size());
  for (NodeId v : items) scratch[count[key(v)]++] = v;
  items.swap(scratch);
}

}  // namespace

SuffixOrder SuffixOrder::build(const CommonSuffixTrie& trie) {
  const auto n = static_cast<std::uint32_t>(trie.num_nodes());
  SuffixOrder so;

  // levels[k][v]: dense rank (1-based) of the first 2^k symbols of suf(v).
  std::vector<std::vector<std::uint32_t>> levels;
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{1});
  std::vector<NodeId> scratch;

  {
    std::vector<Symbol> alphabet(trie.labels().begin() + 1, trie.labels().end());
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    std::vector<std::uint32_t> first(n + 1, 0);
    for (NodeId v = 1; v <= n; ++v) {
      first[v] = static_cast<std::uint32_t>(
          std::lower_bound(alphabet.begin(), alphabet.end(), trie.in_label(v)) -
          alphabet.begin());
    }
    counting_sort(order, scratch, alphabet.size(),
                  [&](NodeId v) { return first[v]; });
    // Convert to 1-based dense ranks.
    std::vector<std::uint32_t> rank(n + 1, 0);
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (i == 0 || first[order[i]] != first[order[i - 1]]) ++r;
      rank[order[i]] = r;
    }
    levels.push_back(std::move(rank));
  }

  auto distinct = [&](const std::vector<std::uint32_t>& rank) {
    return n == 0 || rank[order.back()] == n;
  };

  while (!distinct(levels.back())) {
    const std::size_t k = levels.size() - 1;  // current length 2^k
    const std::uint32_t len = std::uint32_t{1} << k;
    const auto& cur = levels.back();
    const auto jump = trie.jump_table(k);
    auto second = [&](NodeId v) -> std::uint32_t {
      // suf(v)[len+1..] is suf of the ancestor len edges up; shorter suffixes
      // are already uniquely ranked, so the marker value is immaterial.
      return trie.sdepth(v) > len ? cur[jump[v]] : 0;
    };
    counting_sort(order, scratch, n + 1, second);
    counting_sort(order, scratch, n + 1, [&](NodeId v) { return cur[v]; });
    std::vector<std::uint32_t> next(n + 1, 0);
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      const NodeId v = order[i];
      if (i == 0 || cur[v] != cur[order[i - 1]] ||
          second(v) != second(order[i - 1])) {
        ++r;
      }
      next[v] = r;
    }
    levels.push_back(std::move(next));
  }
  so.rounds_ = levels.size();

  so.isa0_ = levels.back();
  so.sa0_.assign(n + 1, kBottom);
  for (NodeId v = 1; v <= n; ++v) so.sa0_[so.isa0_[v]] = v;

  // Adjacent LCP from the rank tables: descend power-of-two steps while the
  // 2^k-prefixes agree.
  so.lcp0_.assign(n + 1, 0);
  for (std::uint32_t r = 2; r <= n; ++r) {
    NodeId a = so.sa0_[r - 1];
    NodeId b = so.sa0_[r];
    std::uint32_t lcp = 0;
    for (std::size_t k = levels.size(); k-- > 0;) {
      if (levels[k][a] == levels[k][b]) {
        lcp += std::uint32_t{1} << k;
        a = trie.jump_table(k)[a];
        b = trie.jump_table(k)[b];
      }
    }
    so.lcp0_[r] = lcp;
  }
  so.rmq_ = RangeMin(so.lcp0_);
  return so;
}

std::uint32_t SuffixOrder::lce_to_root(NodeId u, NodeId v) const {
  if (u == v) throw std::invalid_argument("lce_to_root: u == v");
  auto a = isa0_[u];
  auto b = isa0_[v];
  if (a > b) std::swap(a, b);
  return rmq_.min(a + 1, b);
}

}  // namespace trie_runs
