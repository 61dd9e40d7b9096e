#include "trie_runs/runs.hpp"

#include <algorithm>
#include <thread>
#include <tuple>

namespace trie_runs {

std::string to_string(const BigRational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

namespace {

template <typename F>
auto timed(std::chrono::nanoseconds* sink, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  if (sink) *sink = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace

TrieIndex::TrieIndex(CommonSuffixTrie trie, BuildTimings* timings)
    : trie_(std::move(trie)) {
  orders_ = timed(timings ? &timings->orders : nullptr,
                  [&] { return compute_orders(trie_); });
  suffixes_ = timed(timings ? &timings->suffix_order : nullptr,
                    [&] { return SuffixOrder::build(trie_); });
  lyndon_ = timed(timings ? &timings->lyndon : nullptr,
                  [&] { return build_lyndon_table(trie_, suffixes_); });
  grid_ = timed(timings ? &timings->grid : nullptr,
                [&] { return GridIndex(trie_, orders_, suffixes_); });
}

std::vector<Candidate> collect_candidates(const TrieIndex& index) {
  const auto& trie = index.trie();
  const auto& so = index.suffixes();
  const auto& ly = index.lyndon();
  const auto n = static_cast<std::uint32_t>(trie.num_nodes());
  std::vector<Candidate> out;
  out.reserve(2 * (n > 0 ? n - 1 : 0));
  for (std::uint32_t r = 1; r <= n; ++r) {
    const NodeId v = so.sa0(r);
    if (v == kRoot) continue;
    for (int order = 0; order < 2; ++order) {
      out.push_back(Candidate{v, ly.nsv[order][v], ly.llen[order][v], order});
    }
  }
  return out;
}

std::optional<Confirmation> try_confirm_run(const TrieIndex& index,
                                            const Candidate& c) {
  // A Lyndon prefix running into the sentinel cannot be a period.
  if (c.shallow == kBottom || c.period == 0) return std::nullopt;
  const auto& trie = index.trie();
  const std::uint32_t p = c.period;
  const std::uint32_t z = index.suffixes().lce_to_root(c.deep, c.shallow);
  // Only the topmost L-root occurrence, and only under the order in which the
  // symbol breaking the period at the top is smaller.
  if (z >= p) return std::nullopt;
  const Symbol breaking = trie.suffix_char(c.deep, p + z + 1);
  const Symbol in_period = trie.suffix_char(c.deep, z + 1);
  const bool smaller = c.order == 0 ? breaking < in_period : breaking > in_period;
  if (!smaller) return std::nullopt;

  const NodeId top = trie.ancestor_at(c.shallow, z);
  const NodeId mid = trie.ancestor_at(c.deep, z);  // p edges below top
  const auto match = index.grid().lce_down(mid, trie.sdepth(top) + 2 * p);
  if (!match || match->lcp < p) return std::nullopt;
  return Confirmation{top, match->node, p};
}

NodeId extend_to_deep_endpoint(const TrieIndex& index, NodeId /*shallow*/,
                               NodeId anchor, std::uint32_t period) {
  const auto& trie = index.trie();
  const auto& grid = index.grid();
  const std::uint32_t p = period;

  // The node t edges below cur continues the period iff the node p - t edges
  // above cur has a descendant p edges down matching its own first p symbols.
  NodeId cur = anchor;
  auto reach = [&](std::uint32_t t) -> std::optional<NodeId> {
    const NodeId from = trie.ancestor_at(cur, p - t);
    const auto m = grid.lce_down(from, trie.sdepth(from) + p);
    if (m && m->lcp >= p) return m->node;
    return std::nullopt;
  };

  while (auto next = reach(p)) cur = *next;

  NodeId best = cur;
  std::uint32_t ok = 0;
  std::uint32_t fail = p;
  for (std::uint32_t t = 1; t < p; t *= 2) {
    if (auto r = reach(t)) {
      ok = t;
      best = *r;
    } else {
      fail = t;
      break;
    }
  }
  while (fail - ok > 1) {
    const std::uint32_t mid = ok + (fail - ok) / 2;
    if (auto r = reach(mid)) {
      ok = mid;
      best = *r;
    } else {
      fail = mid;
    }
  }
  return best;
}

namespace {

unsigned worker_count(const EnumerateOptions& options, std::size_t work) {
  unsigned threads = std::max(1u, options.threads);
  if (work < 4096) threads = 1;
  return threads;
}

// Applies f to each candidate (possibly in parallel) and concatenates the
// produced values in candidate order.
template <typename T, typename F>
std::vector<T> for_candidates(const std::vector<Candidate>& cands,
                              const EnumerateOptions& options, F f) {
  const unsigned threads = worker_count(options, cands.size());
  std::vector<std::vector<T>> parts(threads);
  auto work = [&](unsigned part) {
    const std::size_t first = cands.size() * part / threads;
    const std::size_t last = cands.size() * (part + 1) / threads;
    for (std::size_t i = first; i < last; ++i) {
      if (auto value = f(cands[i])) parts[part].push_back(*value);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  std::vector<T> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace

std::vector<Confirmation> count_runs(const TrieIndex& index,
                                     const EnumerateOptions& options) {
  const auto cands = collect_candidates(index);
  auto found = for_candidates<Confirmation>(
      cands, options, [&](const Candidate& c) { return try_confirm_run(index, c); });

  const auto& trie = index.trie();
  const auto& so = index.suffixes();
  auto key = [&](const Confirmation& c) {
    return std::make_tuple(trie.sdepth(c.shallow), so.isa0(c.shallow), c.period,
                           so.isa0(c.anchor));
  };
  std::sort(found.begin(), found.end(),
            [&](const auto& a, const auto& b) { return key(a) < key(b); });
  for (std::size_t i = 1; i < found.size(); ++i) {
    if (found[i] == found[i - 1]) {
      throw DuplicateRunError("run with shallow endpoint " +
                              std::to_string(found[i].shallow) + " and period " +
                              std::to_string(found[i].period) +
                              " confirmed twice");
    }
  }
  return found;
}

std::vector<RunRecord> enumerate_runs(const TrieIndex& index,
                                      const EnumerateOptions& options) {
  const auto& trie = index.trie();
  const auto cands = collect_candidates(index);
  auto runs = for_candidates<RunRecord>(
      cands, options, [&](const Candidate& c) -> std::optional<RunRecord> {
        const auto conf = try_confirm_run(index, c);
        if (!conf) return std::nullopt;
        const NodeId deep =
            extend_to_deep_endpoint(index, conf->shallow, conf->anchor, conf->period);
        return RunRecord{deep, conf->shallow, conf->period,
                         trie.sdepth(deep) - trie.sdepth(conf->shallow)};
      });

  const auto& so = index.suffixes();
  auto key = [&](const RunRecord& r) {
    return std::make_tuple(trie.sdepth(r.shallow), so.isa0(r.shallow),
                           so.isa0(r.deep), r.period);
  };
  std::sort(runs.begin(), runs.end(),
            [&](const auto& a, const auto& b) { return key(a) < key(b); });
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (runs[i].deep == runs[i - 1].deep && runs[i].shallow == runs[i - 1].shallow) {
      throw DuplicateRunError("run (" + std::to_string(runs[i].deep) + ", " +
                              std::to_string(runs[i].shallow) +
                              ") confirmed twice");
    }
  }
  return runs;
}

RunStats run_stats(const std::vector<RunRecord>& runs,
                   const CommonSuffixTrie& trie) {
  RunStats s;
  s.count = runs.size();
  s.edge_count = trie.edge_count();
  std::map<std::uint32_t, std::uint64_t> length_per_period;
  for (const auto& r : runs) {
    ++s.period_histogram[r.period];
    length_per_period[r.period] += r.length;
    const std::uint64_t whole = r.length / r.period;
    s.sum_floor_exponent_minus_one += std::max<std::uint64_t>(whole - 1, 1);
    const auto e = r.exponent();
    if (s.max_exponent < e) s.max_exponent = e;
  }
  // Summing per period keeps the denominators small.
  for (const auto& [period, total] : length_per_period) {
    s.sum_exponents += BigRational(total, period);
  }
  return s;
}

}  // namespace trie_runs
