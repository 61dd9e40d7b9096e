#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trie_runs/trie.hpp"

namespace trie_runs {

/// Malformed input text; `line` is 1-based (0 when not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                                : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// One string per line, bytes as symbols, blank lines skipped.
std::vector<std::vector<Symbol>> parse_string_set(std::string_view text);

/// TSV with header `child<TAB>parent<TAB>label`; parent -1 marks the root.
/// Labels are decimal integers or a single non-digit character.
std::vector<EdgeRow> parse_edge_list(std::string_view text);

/// Edge list using dense ids and decimal labels. Re-parsing the output and
/// writing it again reproduces the same bytes.
std::string write_edge_list(const CommonSuffixTrie& trie);

struct DotHighlight {
  NodeId deep = kBottom;
  NodeId shallow = kBottom;
  std::uint32_t period = 0;
};

std::string write_dot(const CommonSuffixTrie& trie,
                      const std::optional<DotHighlight>& highlight = std::nullopt);

/// Printable form of a label: the character itself when it is visible ASCII.
std::string label_text(Symbol s);

}  // namespace trie_runs
