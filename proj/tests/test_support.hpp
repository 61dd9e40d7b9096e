#pragma once

#include <string_view>
#include <vector>

#include "trie_runs/trie.hpp"

namespace trie_runs::testing {

inline std::vector<Symbol> sym(std::string_view s) {
  return {s.begin(), s.end()};
}

/// Path trie whose deepest node reads `word` toward the root.
inline CommonSuffixTrie path_trie(std::string_view word) {
  const std::vector<std::vector<Symbol>> one{sym(word)};
  return CommonSuffixTrie::from_strings(one, Direction::kRootward);
}

/// Node k of the hand-drawn fixtures (n0 = root).
inline NodeId n(unsigned k) { return k + 1; }

/// root -b- n1 -a- n2 -b- n3 -a- n4, plus n2 -c- n5.
inline std::vector<EdgeRow> e2_rows() {
  return {{1, 0, 'b'}, {2, 1, 'a'}, {3, 2, 'b'}, {4, 3, 'a'}, {5, 2, 'c'}};
}
inline CommonSuffixTrie e2_trie() { return CommonSuffixTrie::from_edges(e2_rows()); }

}  // namespace trie_runs::testing
