#include "trie_runs/trie_io.hpp"

#include <charconv>
#include <sstream>

namespace trie_runs {

namespace {

// Calls f(line_number, line) for every line, with a trailing '\r' removed.
template <typename F>
void for_each_line(std::string_view text, F f) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    f(line_no, line);
  }
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

template <typename Int>
bool parse_int(std::string_view s, Int& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

std::vector<std::vector<Symbol>> parse_string_set(std::string_view text) {
  std::vector<std::vector<Symbol>> out;
  for_each_line(text, [&](std::size_t, std::string_view line) {
    if (line.empty()) return;
    std::vector<Symbol> s;
    s.reserve(line.size());
    for (char c : line) s.push_back(static_cast<unsigned char>(c));
    out.push_back(std::move(s));
  });
  if (out.empty()) throw ParseError(0, "string set is empty");
  return out;
}

std::vector<EdgeRow> parse_edge_list(std::string_view text) {
  std::vector<EdgeRow> rows;
  bool header_seen = false;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (line.empty()) return;
    if (!header_seen) {
      if (line != "child\tparent\tlabel") {
        throw ParseError(line_no, "expected header 'child<TAB>parent<TAB>label'");
      }
      header_seen = true;
      return;
    }
    std::string_view fields[3];
    std::size_t count = 0;
    std::size_t start = 0;
    while (true) {
      const auto tab = line.find('\t', start);
      if (count == 3) throw ParseError(line_no, "expected 3 fields");
      fields[count++] = line.substr(start, tab == std::string_view::npos
                                               ? std::string_view::npos
                                               : tab - start);
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (count != 3) throw ParseError(line_no, "expected 3 fields");

    EdgeRow row;
    if (!parse_int(fields[0], row.child) || row.child < 0) {
      throw ParseError(line_no, "bad child id '" + std::string(fields[0]) + "'");
    }
    std::int64_t parent = 0;
    if (!parse_int(fields[1], parent) || parent < -1) {
      throw ParseError(line_no, "bad parent id '" + std::string(fields[1]) + "'");
    }
    if (parent == -1) {
      rows.push_back(row);  // root row: label ignored
      return;
    }
    row.parent = parent;
    const auto label = fields[2];
    if (all_digits(label)) {
      std::uint64_t value = 0;
      if (!parse_int(label, value) || value > kReservedSymbol) {
        throw ParseError(line_no, "label '" + std::string(label) + "' out of range");
      }
      row.label = static_cast<Symbol>(value);
    } else if (label.size() == 1) {
      row.label = static_cast<unsigned char>(label[0]);
    } else {
      throw ParseError(line_no, "label must be an integer or a single character");
    }
    rows.push_back(row);
  });
  if (!header_seen) throw ParseError(0, "edge list is empty");
  if (rows.empty()) throw ParseError(0, "edge list has no rows");
  return rows;
}

std::string write_edge_list(const CommonSuffixTrie& trie) {
  std::string out = "child\tparent\tlabel\n1\t-1\t-\n";
  for (NodeId v = 2; v <= trie.num_nodes(); ++v) {
    out += std::to_string(v);
    out += '\t';
    out += std::to_string(trie.parent(v));
    out += '\t';
    out += std::to_string(trie.in_label(v));
    out += '\n';
  }
  return out;
}

std::string label_text(Symbol s) {
  if (s >= 33 && s <= 126) return std::string(1, static_cast<char>(s));
  return std::to_string(s);
}

std::string write_dot(const CommonSuffixTrie& trie,
                      const std::optional<DotHighlight>& highlight) {
  auto escape = [](const std::string& s) {
    std::string e;
    for (char c : s) {
      if (c == '"' || c == '\\') e += '\\';
      e += c;
    }
    return e;
  };
  // Nodes strictly below the shallow endpoint on the highlighted path.
  std::vector<std::uint8_t> on_run(trie.num_nodes() + 1, 0);
  if (highlight) {
    for (NodeId v = highlight->deep; v != highlight->shallow && v != kBottom;
         v = trie.parent(v)) {
      on_run[v] = 1;
    }
  }

  std::ostringstream os;
  os << "digraph trie {\n";
  if (highlight) {
    os << "  label=\"run (" << highlight->deep << ", " << highlight->shallow
       << ") p=" << highlight->period << "\";\n";
  }
  os << "  n0 [label=\"bottom\\nsd=0\", shape=point];\n";
  for (NodeId v = 1; v <= trie.num_nodes(); ++v) {
    os << "  n" << v << " [label=\"" << v << "\\nsd=" << trie.sdepth(v) << "\"];\n";
  }
  os << "  n0 -> n1 [label=\"$\", style=dashed];\n";
  for (NodeId v = 2; v <= trie.num_nodes(); ++v) {
    os << "  n" << trie.parent(v) << " -> n" << v << " [label=\""
       << escape(label_text(trie.in_label(v))) << "\"";
    if (on_run[v]) os << ", color=red, penwidth=2";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace trie_runs
