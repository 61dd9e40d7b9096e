#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "trie_runs/trie.hpp"

namespace trie_runs {

enum class GeneratorKind { kRandom, kPath, kFibonacciPath, kThueMorsePath, kCaterpillar };

std::optional<GeneratorKind> parse_generator_kind(std::string_view name);
std::string_view generator_kind_name(GeneratorKind kind);

/// Synthetic trie description. Labels are 'a', 'b', ... (alphabet symbols).
///   random       each new node hangs below the newest node, or with
///                probability `branching` below a uniformly chosen one
///   path         cyclic word abc..abc.. over the alphabet
///   fibonacci-path / thue-morse-path   prefixes of the classic words
///   caterpillar  random spine; each spine node gets a pendant leaf with
///                probability `branching`
/// Path kinds are read toward the root: the leaf's suffix spells the word.
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kRandom;
  std::uint32_t size = 100;  // node count, root included
  std::uint32_t alphabet = 2;
  double branching = 0.3;
  std::uint64_t seed = 1;
};

/// Deterministic: the same spec always yields the same trie on every platform.
CommonSuffixTrie generate(const GeneratorSpec& spec);

/// Words behind the path kinds, length n, over symbols base, base+1.
std::vector<Symbol> fibonacci_word(std::size_t n, Symbol base = 'a');
std::vector<Symbol> thue_morse_word(std::size_t n, Symbol base = 'a');

/// Portable draws from mt19937_64 (standard distributions are
/// implementation-defined).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// True with probability p.
  bool chance(double p);

 private:
  std::mt19937_64 engine_;
};

}  // namespace trie_runs
