#include "trie_runs/generators.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace trie_runs {

std::optional<GeneratorKind> parse_generator_kind(std::string_view name) {
  if (name == "random") return GeneratorKind::kRandom;
  if (name == "path") return GeneratorKind::kPath;
  if (name == "fibonacci-path") return GeneratorKind::kFibonacciPath;
  if (name == "thue-morse-path") return GeneratorKind::kThueMorsePath;
  if (name == "caterpillar") return GeneratorKind::kCaterpillar;
  return std::nullopt;
}

std::string_view generator_kind_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kRandom: return "random";
    case GeneratorKind::kPath: return "path";
    case GeneratorKind::kFibonacciPath: return "fibonacci-path";
    case GeneratorKind::kThueMorsePath: return "thue-morse-path";
    case GeneratorKind::kCaterpillar: return "caterpillar";
  }
  return "random";
}

std::uint64_t SeededRng::below(std::uint64_t bound) {
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

bool SeededRng::chance(double p) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return u < p;
}

std::vector<Symbol> fibonacci_word(std::size_t n, Symbol base) {
  std::vector<Symbol> a{base};
  std::vector<Symbol> b{base, static_cast<Symbol>(base + 1)};
  if (n <= 1) return std::vector<Symbol>(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n));
  while (b.size() < n) {
    std::vector<Symbol> c = b;
    c.insert(c.end(), a.begin(), a.end());
    a = std::move(b);
    b = std::move(c);
  }
  b.resize(n);
  return b;
}

std::vector<Symbol> thue_morse_word(std::size_t n, Symbol base) {
  std::vector<Symbol> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = base + static_cast<Symbol>(std::popcount(i) & 1);
  }
  return w;
}

namespace {

CommonSuffixTrie path_trie(const std::vector<Symbol>& word) {
  const std::vector<std::vector<Symbol>> one{word};
  return CommonSuffixTrie::from_strings(one, Direction::kRootward);
}

}  // namespace

CommonSuffixTrie generate(const GeneratorSpec& spec) {
  if (spec.size == 0) throw std::invalid_argument("generator size must be >= 1");
  if (spec.alphabet == 0) throw std::invalid_argument("alphabet must be >= 1");
  if (spec.branching < 0.0 || spec.branching > 1.0) {
    throw std::invalid_argument("branching must lie in [0, 1]");
  }
  const bool branches =
      spec.branching > 0.0 && (spec.kind == GeneratorKind::kRandom ||
                               spec.kind == GeneratorKind::kCaterpillar);
  if (branches && spec.alphabet < 2) {
    throw std::invalid_argument(
        "alphabet smaller than the branching width (2 distinct sibling labels)");
  }
  const std::size_t len = spec.size - 1;
  constexpr Symbol base = 'a';

  switch (spec.kind) {
    case GeneratorKind::kPath: {
      std::vector<Symbol> w(len);
      for (std::size_t i = 0; i < len; ++i) w[i] = base + static_cast<Symbol>(i % spec.alphabet);
      return path_trie(w);
    }
    case GeneratorKind::kFibonacciPath:
      return path_trie(fibonacci_word(len, base));
    case GeneratorKind::kThueMorsePath:
      return path_trie(thue_morse_word(len, base));
    default:
      break;
  }

  SeededRng rng(spec.seed);
  std::vector<EdgeRow> rows;
  rows.reserve(spec.size);
  rows.push_back(EdgeRow{1, std::nullopt, 0});
  // Labels used below each node, as a small sorted list.
  std::vector<std::vector<Symbol>> used(spec.size + 1);

  auto add_child = [&](std::uint32_t parent) {
    auto& taken = used[parent];
    Symbol label;
    do {
      label = base + static_cast<Symbol>(rng.below(spec.alphabet));
    } while (std::find(taken.begin(), taken.end(), label) != taken.end());
    taken.push_back(label);
    const auto id = static_cast<std::uint32_t>(rows.size() + 1);
    rows.push_back(EdgeRow{id, parent, label});
    return id;
  };

  if (spec.kind == GeneratorKind::kRandom) {
    std::uint32_t newest = 1;
    while (rows.size() < spec.size) {
      std::uint32_t parent = newest;
      if (rng.chance(spec.branching)) {
        const auto pick = static_cast<std::uint32_t>(rng.below(rows.size()) + 1);
        if (used[pick].size() < spec.alphabet) parent = pick;
      }
      newest = add_child(parent);
    }
  } else {  // caterpillar
    std::uint32_t spine = 1;
    while (rows.size() < spec.size) {
      const auto next = add_child(spine);
      if (rows.size() < spec.size && rng.chance(spec.branching)) add_child(spine);
      spine = next;
    }
  }
  return CommonSuffixTrie::from_edges(rows);
}

}  // namespace trie_runs
