#include "trie_runs/trie.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace trie_runs {

namespace {

std::string describe_label(Symbol s) {
  if (s >= 33 && s <= 126) {
    return "'" + std::string(1, static_cast<char>(s)) + "' (" +
           std::to_string(s) + ")";
  }
  return std::to_string(s);
}

}  // namespace

CommonSuffixTrie CommonSuffixTrie::from_strings(
    std::span<const std::vector<Symbol>> strings, Direction direction) {
  if (strings.empty()) {
    throw std::invalid_argument("cannot build a trie from an empty string set");
  }
  std::vector<std::int64_t> parent{-1};
  std::vector<Symbol> label{0};
  std::unordered_map<std::uint64_t, std::uint32_t> edges;

  for (const auto& str : strings) {
    std::uint32_t cur = 0;
    auto step = [&](Symbol s) {
      if (s == kReservedSymbol) {
        throw TrieInvariantError("symbol " + std::to_string(s) +
                                 " collides with the sentinel value");
      }
      const std::uint64_t key = (std::uint64_t{cur} << 32) | s;
      auto [it, inserted] =
          edges.try_emplace(key, static_cast<std::uint32_t>(parent.size()));
      if (inserted) {
        parent.push_back(cur);
        label.push_back(s);
      }
      cur = it->second;
    };
    if (direction == Direction::kLeafward) {
      for (Symbol s : str) step(s);
    } else {
      for (auto it = str.rbegin(); it != str.rend(); ++it) step(*it);
    }
  }
  std::vector<std::int64_t> original(parent.size());
  for (std::size_t i = 0; i < original.size(); ++i) {
    original[i] = static_cast<std::int64_t>(i);
  }
  auto trie = finalize(std::move(parent), std::move(label), std::move(original));
  // Temporary ids carry no meaning for string input.
  for (NodeId v = 1; v <= trie.num_nodes(); ++v) trie.original_id_[v] = v;
  return trie;
}

CommonSuffixTrie CommonSuffixTrie::from_edges(std::span<const EdgeRow> rows) {
  if (rows.empty()) throw TrieInvariantError("edge list is empty");

  std::unordered_map<std::int64_t, std::uint32_t> index;
  index.reserve(rows.size() * 2);
  std::vector<std::int64_t> original;
  original.reserve(rows.size());
  for (const auto& row : rows) {
    auto [it, inserted] = index.try_emplace(
        row.child, static_cast<std::uint32_t>(original.size()));
    if (!inserted) {
      throw TrieInvariantError("node " + std::to_string(row.child) +
                               " is listed as a child more than once");
    }
    original.push_back(row.child);
  }

  std::vector<std::int64_t> parent(rows.size(), -1);
  std::vector<Symbol> label(rows.size(), 0);
  std::optional<std::int64_t> explicit_root;
  std::vector<std::int64_t> implicit_roots;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.parent) {
      if (explicit_root) {
        throw TrieInvariantError("multiple root rows (" +
                                 std::to_string(*explicit_root) + ", " +
                                 std::to_string(row.child) + ")");
      }
      explicit_root = row.child;
      continue;
    }
    label[i] = row.label;
    auto it = index.find(*row.parent);
    if (it == index.end()) {
      if (std::find(implicit_roots.begin(), implicit_roots.end(),
                    *row.parent) == implicit_roots.end()) {
        implicit_roots.push_back(*row.parent);
      }
      continue;  // patched below once the root is known
    }
    parent[i] = it->second;
  }

  if (explicit_root) {
    if (!implicit_roots.empty()) {
      throw TrieInvariantError("disconnected: parent " +
                               std::to_string(implicit_roots.front()) +
                               " has no row of its own");
    }
  } else {
    if (implicit_roots.size() != 1) {
      throw TrieInvariantError(
          implicit_roots.empty()
              ? "no root: every node has a parent (cycle detected)"
              : "disconnected: more than one root candidate");
    }
    // Materialize the implicit root as an extra temporary node.
    const auto root_id = implicit_roots.front();
    const auto root_index = static_cast<std::uint32_t>(original.size());
    index.emplace(root_id, root_index);
    original.push_back(root_id);
    parent.push_back(-1);
    label.push_back(0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].parent && *rows[i].parent == root_id) parent[i] = root_index;
    }
  }
  return finalize(std::move(parent), std::move(label), std::move(original));
}

CommonSuffixTrie CommonSuffixTrie::finalize(
    std::vector<std::int64_t> temp_parent, std::vector<Symbol> temp_label,
    std::vector<std::int64_t> temp_original) {
  const std::size_t m = temp_parent.size();
  std::int64_t root = -1;
  for (std::size_t i = 0; i < m; ++i) {
    if (temp_parent[i] < 0) {
      if (root >= 0) throw TrieInvariantError("multiple roots");
      root = static_cast<std::int64_t>(i);
    }
  }
  if (root < 0) throw TrieInvariantError("no root: cycle detected");

  Symbol max_label = 0;
  bool any_label = false;
  for (std::size_t i = 0; i < m; ++i) {
    if (static_cast<std::int64_t>(i) == root) continue;
    if (temp_label[i] == kReservedSymbol) {
      throw TrieInvariantError("label " + std::to_string(temp_label[i]) +
                               " collides with the sentinel value");
    }
    max_label = std::max(max_label, temp_label[i]);
    any_label = true;
  }

  // Children CSR over temporary ids, sorted by label.
  std::vector<std::uint32_t> begin(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (temp_parent[i] >= 0) ++begin[static_cast<std::size_t>(temp_parent[i]) + 1];
  }
  for (std::size_t i = 0; i < m; ++i) begin[i + 1] += begin[i];
  std::vector<std::uint32_t> list(begin[m]);
  {
    std::vector<std::uint32_t> fill(begin.begin(), begin.end() - 1);
    for (std::size_t i = 0; i < m; ++i) {
      if (temp_parent[i] >= 0) {
        list[fill[static_cast<std::size_t>(temp_parent[i])]++] =
            static_cast<std::uint32_t>(i);
      }
    }
  }
  for (std::size_t u = 0; u < m; ++u) {
    auto first = list.begin() + begin[u];
    auto last = list.begin() + begin[u + 1];
    std::sort(first, last, [&](std::uint32_t a, std::uint32_t b) {
      return temp_label[a] < temp_label[b];
    });
    for (auto it = first; it != last && it + 1 != last; ++it) {
      if (temp_label[*it] == temp_label[*(it + 1)]) {
        throw TrieInvariantError(
            "duplicate child label " + describe_label(temp_label[*it]) +
            " under node " + std::to_string(temp_original[u]));
      }
    }
  }

  // Preorder renumbering.
  std::vector<NodeId> dense(m, 0);
  std::vector<std::uint32_t> order;
  order.reserve(m);
  {
    std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(root)};
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      order.push_back(u);
      dense[u] = static_cast<NodeId>(order.size());
      for (auto i = begin[u + 1]; i > begin[u]; --i) stack.push_back(list[i - 1]);
    }
  }
  if (order.size() != m) {
    // Some node never reached the root: either a cycle or a detached piece.
    std::vector<std::uint8_t> seen(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (dense[i] != 0) continue;
      std::size_t u = i;
      while (temp_parent[u] >= 0 && dense[u] == 0 && !seen[u]) {
        seen[u] = 1;
        u = static_cast<std::size_t>(temp_parent[u]);
      }
      if (seen[u] && dense[u] == 0) {
        throw TrieInvariantError("cycle detected through node " +
                                 std::to_string(temp_original[u]));
      }
    }
    throw TrieInvariantError("disconnected nodes present");
  }

  CommonSuffixTrie t;
  const std::size_t n = m;
  t.sentinel_ = any_label ? max_label + 1 : 0;
  t.parent_.assign(n + 1, kBottom);
  t.label_.assign(n + 1, 0);
  t.sdepth_.assign(n + 1, 0);
  t.original_id_.assign(n + 1, -1);
  t.child_begin_.assign(n + 2, 0);
  t.child_list_.reserve(n > 0 ? n - 1 : 0);
  for (std::size_t k = 0; k < n; ++k) {
    const auto u = order[k];
    const NodeId v = static_cast<NodeId>(k + 1);
    t.original_id_[v] = temp_original[u];
    if (v == kRoot) {
      t.parent_[v] = kBottom;
      t.label_[v] = t.sentinel_;
    } else {
      t.parent_[v] = dense[static_cast<std::size_t>(temp_parent[u])];
      t.label_[v] = temp_label[u];
    }
    t.sdepth_[v] = t.sdepth_[t.parent_[v]] + 1;
    t.max_sdepth_ = std::max(t.max_sdepth_, t.sdepth_[v]);
  }
  // Children: each child list is ascending in label, hence in dense id.
  for (NodeId v = 2; v <= n; ++v) ++t.child_begin_[t.parent_[v] + 1];
  for (std::size_t v = 0; v <= n; ++v) t.child_begin_[v + 1] += t.child_begin_[v];
  t.child_list_.resize(t.child_begin_[n + 1]);
  {
    std::vector<std::uint32_t> fill(t.child_begin_.begin(), t.child_begin_.end() - 1);
    for (NodeId v = 2; v <= n; ++v) t.child_list_[fill[t.parent_[v]]++] = v;
  }
  t.subtree_size_.assign(n + 1, 1);
  t.subtree_size_[0] = static_cast<std::uint32_t>(n + 1);
  for (NodeId v = static_cast<NodeId>(n); v >= 2; --v) {
    t.subtree_size_[t.parent_[v]] += t.subtree_size_[v];
  }

  const std::size_t levels =
      std::max<std::size_t>(1, std::bit_width(t.max_sdepth_));
  t.jump_.assign(levels, std::vector<NodeId>(n + 1, kBottom));
  t.jump_[0] = t.parent_;
  for (std::size_t k = 1; k < levels; ++k) {
    const auto& prev = t.jump_[k - 1];
    auto& cur = t.jump_[k];
    for (std::size_t v = 0; v <= n; ++v) cur[v] = prev[prev[v]];
  }
  return t;
}

std::optional<NodeId> CommonSuffixTrie::child(NodeId v, Symbol label) const {
  auto kids = children(v);
  auto it = std::lower_bound(kids.begin(), kids.end(), label,
                             [&](NodeId c, Symbol s) { return label_[c] < s; });
  if (it != kids.end() && label_[*it] == label) return *it;
  return std::nullopt;
}

NodeId CommonSuffixTrie::ancestor_at(NodeId v, std::uint32_t k) const {
  if (v >= parent_.size() || k > sdepth_[v]) {
    throw std::out_of_range("ancestor_at: k=" + std::to_string(k) +
                            " exceeds sdepth of node " + std::to_string(v));
  }
  for (std::size_t bit = 0; k != 0; ++bit, k >>= 1) {
    if (k & 1u) v = jump_[bit][v];
  }
  return v;
}

Symbol CommonSuffixTrie::suffix_char(NodeId v, std::uint32_t i) const {
  if (v >= parent_.size() || i == 0 || i > sdepth_[v]) {
    throw std::out_of_range("suffix_char: position " + std::to_string(i) +
                            " outside suf(" + std::to_string(v) + ")");
  }
  return label_[ancestor_at(v, i - 1)];
}

std::vector<Symbol> CommonSuffixTrie::suffix(NodeId v) const {
  std::vector<Symbol> out;
  out.reserve(sdepth_[v]);
  for (; v != kBottom; v = parent_[v]) out.push_back(label_[v]);
  return out;
}

NodeOrders compute_orders(const CommonSuffixTrie& trie) {
  const auto n = static_cast<std::uint32_t>(trie.num_nodes());
  const auto max_sd = trie.max_sdepth();
  NodeOrders o;
  o.pre.assign(n + 1, 0);
  o.post.assign(n + 1, 0);
  o.bfs_pos.assign(n + 1, 0);
  o.bfs_node.assign(n + 1, kBottom);
  o.depth_interval.assign(max_sd + 1, BfsInterval{});

  // Ids are preorder ranks. A node finishes after the nodes preceding it in
  // preorder that are not its ancestors, and after its own descendants.
  for (NodeId v = 1; v <= n; ++v) {
    o.pre[v] = v;
    o.post[v] = v + trie.subtree_size(v) - 1 - (trie.sdepth(v) - 1);
  }

  // Stable bucket by sdepth over preorder keeps same-depth nodes in DFS order.
  std::vector<std::uint32_t> count(max_sd + 2, 0);
  for (NodeId v = 1; v <= n; ++v) ++count[trie.sdepth(v)];
  std::uint32_t next = 1;
  for (std::uint32_t d = 1; d <= max_sd; ++d) {
    o.depth_interval[d] = BfsInterval{next, next + count[d] - 1};
    count[d] = next;
    next += o.depth_interval[d].size();
  }
  for (NodeId v = 1; v <= n; ++v) {
    const auto x = count[trie.sdepth(v)]++;
    o.bfs_pos[v] = x;
    o.bfs_node[x] = v;
  }
  return o;
}

}  // namespace trie_runs
