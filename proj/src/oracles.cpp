#include "trie_runs/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "trie_runs/trie_io.hpp"

namespace trie_runs::oracle {

namespace {

// fail[L] = length of the longest proper border of w[0..L).
std::vector<std::size_t> failure_function(std::span<const Symbol> w) {
  std::vector<std::size_t> fail(w.size() + 1, 0);
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::size_t k = fail[i];
    while (k > 0 && w[i] != w[k]) k = fail[k];
    if (w[i] == w[k]) ++k;
    fail[i + 1] = k;
  }
  return fail;
}

}  // namespace

std::size_t smallest_period(std::span<const Symbol> w) {
  if (w.empty()) return 0;
  return w.size() - failure_function(w).back();
}

bool lex_less(std::span<const Symbol> a, std::span<const Symbol> b, int order) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return order == 0 ? a[i] < b[i] : a[i] > b[i];
  }
  return a.size() < b.size();
}

bool is_lyndon(std::span<const Symbol> w, int order) {
  if (w.empty()) return false;
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (!lex_less(w, w.subspan(k), order)) return false;
  }
  return true;
}

std::vector<StringRun> string_runs_bruteforce(std::span<const Symbol> w) {
  const std::size_t n = w.size();
  std::vector<StringRun> runs;
  for (std::size_t i = 0; i < n; ++i) {
    const auto fail = failure_function(w.subspan(i));
    for (std::size_t j = i; j < n; ++j) {
      const std::size_t len = j - i + 1;
      const std::size_t p = len - fail[len];
      if (2 * p > len) continue;
      if (i > 0 && w[i - 1] == w[i - 1 + p]) continue;
      if (j + 1 < n && w[j + 1] == w[j + 1 - p]) continue;
      runs.push_back({i + 1, j + 1, p});
    }
  }
  std::sort(runs.begin(), runs.end());
  return runs;
}

std::vector<std::size_t> string_nsv_reference(std::span<const std::int64_t> a) {
  const std::size_t n = a.size();
  // 1-based copies; position n+1 is below every value.
  std::vector<std::size_t> nsv(n + 2, n + 1);
  auto value_below = [&](std::size_t i, std::size_t x) {
    return x == n + 1 || a[x - 1] < a[i - 1];
  };
  if (n == 0) return {};
  nsv[n] = n + 1;
  for (std::size_t i = n - 1; i >= 1; --i) {
    std::size_t x = i + 1;
    while (!value_below(i, x)) x = nsv[x];
    nsv[i] = x;
  }
  return {nsv.begin() + 1, nsv.begin() + static_cast<std::ptrdiff_t>(n) + 1};
}

std::vector<std::size_t> naive_nsv_scan(std::span<const std::int64_t> a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> out(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      if (a[k] < a[i]) {
        out[i] = k + 1;
        break;
      }
    }
  }
  return out;
}

std::vector<std::uint32_t> string_inverse_suffix_array(std::span<const Symbol> w,
                                                       Symbol sentinel) {
  std::vector<Symbol> text(w.begin(), w.end());
  text.push_back(sentinel);
  const std::size_t n = text.size();
  std::vector<std::size_t> starts(n);
  std::iota(starts.begin(), starts.end(), std::size_t{0});
  const std::span<const Symbol> all(text);
  std::sort(starts.begin(), starts.end(), [&](std::size_t a, std::size_t b) {
    return lex_less(all.subspan(a), all.subspan(b), 0);
  });
  std::vector<std::uint32_t> isa(n + 1, 0);
  for (std::size_t r = 0; r < n; ++r) isa[starts[r] + 1] = static_cast<std::uint32_t>(r + 1);
  return isa;
}

std::vector<TrieRun> trie_runs_bruteforce(const CommonSuffixTrie& trie) {
  std::vector<TrieRun> runs;
  std::vector<Symbol> s;
  std::vector<NodeId> up;
  for (NodeId v = 2; v <= trie.num_nodes(); ++v) {
    // s = str(v, root); up[k] = node k edges above v.
    s.clear();
    up.assign(1, v);
    for (NodeId u = v; u != kRoot; u = trie.parent(u)) {
      s.push_back(trie.in_label(u));
      up.push_back(trie.parent(u));
    }
    const auto fail = failure_function(s);
    for (std::size_t len = 2; len <= s.size(); ++len) {
      const std::size_t p = len - fail[len];
      if (2 * p > len) continue;
      const NodeId shallow = up[len];
      // Upward extension appends in_label(shallow); the root's is the sentinel.
      if (trie.in_label(shallow) == s[len - p]) continue;
      // Downward: a child labeled s[p-1] would prepend a period-consistent symbol.
      if (trie.child(v, s[p - 1])) continue;
      runs.push_back({v, shallow, static_cast<std::uint32_t>(p),
                      static_cast<std::uint32_t>(len)});
    }
  }
  std::sort(runs.begin(), runs.end());
  return runs;
}

std::vector<std::uint32_t> naive_suffix_ranks(const CommonSuffixTrie& trie,
                                              int order) {
  const auto n = trie.num_nodes();
  std::vector<std::vector<Symbol>> sufs(n + 1);
  for (NodeId v = 1; v <= n; ++v) sufs[v] = trie.suffix(v);
  std::vector<NodeId> nodes(n);
  std::iota(nodes.begin(), nodes.end(), NodeId{1});
  std::sort(nodes.begin(), nodes.end(), [&](NodeId a, NodeId b) {
    return lex_less(sufs[a], sufs[b], order);
  });
  std::vector<std::uint32_t> rank(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) rank[nodes[i]] = static_cast<std::uint32_t>(i + 1);
  return rank;
}

std::uint32_t naive_lcp(const CommonSuffixTrie& trie, NodeId u, NodeId v) {
  std::uint32_t k = 0;
  while (u != kBottom && v != kBottom && trie.in_label(u) == trie.in_label(v)) {
    ++k;
    u = trie.parent(u);
    v = trie.parent(v);
  }
  return k;
}

std::vector<NodeId> naive_nsv_on_trie(const CommonSuffixTrie& trie,
                                      std::span<const std::uint32_t> ranks) {
  std::vector<NodeId> out(trie.num_nodes() + 1, kBottom);
  for (NodeId v = 1; v <= trie.num_nodes(); ++v) {
    NodeId u = trie.parent(v);
    while (u != kBottom && ranks[u] >= ranks[v]) u = trie.parent(u);
    out[v] = u;
  }
  return out;
}

NaiveOrders naive_node_orders(const CommonSuffixTrie& trie) {
  const auto n = trie.num_nodes();
  NaiveOrders o;
  o.pre.assign(n + 1, 0);
  o.post.assign(n + 1, 0);
  o.bfs_pos.assign(n + 1, 0);
  std::uint32_t pre = 0;
  std::uint32_t post = 0;
  std::function<void(NodeId)> visit = [&](NodeId v) {
    o.pre[v] = ++pre;
    std::vector<NodeId> kids(trie.children(v).begin(), trie.children(v).end());
    std::sort(kids.begin(), kids.end(), [&](NodeId a, NodeId b) {
      return trie.in_label(a) < trie.in_label(b);
    });
    for (NodeId c : kids) visit(c);
    o.post[v] = ++post;
  };
  if (n > 0) visit(kRoot);
  std::vector<NodeId> nodes(n);
  std::iota(nodes.begin(), nodes.end(), NodeId{1});
  std::sort(nodes.begin(), nodes.end(), [&](NodeId a, NodeId b) {
    if (trie.sdepth(a) != trie.sdepth(b)) return trie.sdepth(a) < trie.sdepth(b);
    return o.pre[a] < o.pre[b];
  });
  for (std::size_t i = 0; i < n; ++i) o.bfs_pos[nodes[i]] = static_cast<std::uint32_t>(i + 1);
  return o;
}

std::optional<NaivePoint> naive_range_pred(std::span<const std::uint32_t> ys,
                                           std::uint32_t x1, std::uint32_t x2,
                                           std::uint64_t y) {
  std::optional<NaivePoint> best;
  for (std::uint32_t x = x1; x <= x2; ++x) {
    if (ys[x] <= y && (!best || ys[x] > best->y)) best = NaivePoint{x, ys[x]};
  }
  return best;
}

std::optional<NaivePoint> naive_range_succ(std::span<const std::uint32_t> ys,
                                           std::uint32_t x1, std::uint32_t x2,
                                           std::uint64_t y) {
  std::optional<NaivePoint> best;
  for (std::uint32_t x = x1; x <= x2; ++x) {
    if (ys[x] >= y && (!best || ys[x] < best->y)) best = NaivePoint{x, ys[x]};
  }
  return best;
}

std::vector<NodeId> naive_descendants_at_depth(const CommonSuffixTrie& trie,
                                               NodeId v, std::uint32_t d) {
  std::vector<NodeId> out;
  std::vector<NodeId> stack{v};
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    if (trie.sdepth(u) == d) {
      out.push_back(u);
      continue;
    }
    for (NodeId c : trie.children(u)) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());  // dense ids are preorder ranks
  return out;
}

std::optional<NaiveDown> naive_lce_down(const CommonSuffixTrie& trie, NodeId v,
                                        std::uint32_t d) {
  const auto nodes = naive_descendants_at_depth(trie, v, d);
  if (nodes.empty()) return std::nullopt;
  NaiveDown best;
  for (NodeId u : nodes) {
    const auto lcp = naive_lcp(trie, u, v);
    if (best.attaining.empty() || lcp > best.lcp) {
      best.lcp = lcp;
      best.attaining.assign(1, u);
    } else if (lcp == best.lcp) {
      best.attaining.push_back(u);
    }
  }
  return best;
}

CommonSuffixTrie shrink_counterexample(
    const CommonSuffixTrie& trie,
    const std::function<bool(const CommonSuffixTrie&)>& fails) {
  CommonSuffixTrie cur = trie;
  bool progress = true;
  while (progress && cur.num_nodes() > 1) {
    progress = false;
    for (NodeId leaf = cur.num_nodes(); leaf >= 2; --leaf) {
      if (!cur.children(leaf).empty()) continue;
      std::vector<EdgeRow> rows;
      for (NodeId v = 1; v <= cur.num_nodes(); ++v) {
        if (v == leaf) continue;
        EdgeRow row{v, std::nullopt, cur.in_label(v)};
        if (v != kRoot) row.parent = cur.parent(v);
        rows.push_back(row);
      }
      auto smaller = CommonSuffixTrie::from_edges(rows);
      if (fails(smaller)) {
        cur = std::move(smaller);
        progress = true;
        break;
      }
    }
  }
  return cur;
}

OracleCheck& OracleReport::entry(const std::string& structure) {
  for (auto& c : checks_) {
    if (c.structure == structure) return c;
  }
  OracleCheck fresh;
  fresh.structure = structure;
  checks_.push_back(std::move(fresh));
  return checks_.back();
}

void OracleReport::run(
    const std::string& structure, const CommonSuffixTrie& trie,
    const std::function<std::optional<std::string>(const CommonSuffixTrie&)>& check) {
  auto& e = entry(structure);
  ++e.cases;
  const auto failure = check(trie);
  if (!failure || !e.passed) {
    if (failure) e.passed = false;
    return;
  }
  e.passed = false;
  const auto small = shrink_counterexample(
      trie, [&](const CommonSuffixTrie& t) { return check(t).has_value(); });
  e.detail = check(small).value_or(*failure);
  e.reproducer = write_edge_list(small);
}

bool OracleReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const OracleCheck& c) { return c.passed; });
}

}  // namespace trie_runs::oracle
