#include "doctest.h"

#include "test_support.hpp"
#include "trie_runs/generators.hpp"
#include "trie_runs/trie_io.hpp"

using namespace trie_runs;
using trie_runs::testing::e2_trie;

TEST_CASE("string set parsing") {
  const auto s = parse_string_set("ab\r\n\nba\n");
  REQUIRE(s.size() == 2);
  CHECK(s[0] == std::vector<Symbol>{'a', 'b'});
  CHECK(s[1] == std::vector<Symbol>{'b', 'a'});
  CHECK_THROWS_AS(parse_string_set(""), ParseError);
  CHECK_THROWS_AS(parse_string_set("\n\n"), ParseError);
}

TEST_CASE("edge list parsing") {
  const auto rows = parse_edge_list("child\tparent\tlabel\n1\t-1\t-\n2\t1\ta\n3\t1\t98\n");
  REQUIRE(rows.size() == 3);
  CHECK_FALSE(rows[0].parent);
  CHECK(rows[1].label == 'a');
  CHECK(rows[2].label == 98);
  CHECK(*rows[2].parent == 1);

  CHECK_THROWS_AS(parse_edge_list("child,parent,label\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("child\tparent\tlabel\n1\t2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("child\tparent\tlabel\nx\t1\ta\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("child\tparent\tlabel\n2\t1\tab\n"), ParseError);
  try {
    (void)parse_edge_list("child\tparent\tlabel\n2\t1\ta\n3\t1\tzz\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("edge list round trip is byte-stable") {
  for (std::uint32_t seed = 1; seed <= 20; ++seed) {
    const auto t = generate({GeneratorKind::kRandom, 80, 4, 0.3, seed});
    const auto text = write_edge_list(t);
    const auto again = CommonSuffixTrie::from_edges(parse_edge_list(text));
    CHECK(write_edge_list(again) == text);
  }
}

TEST_CASE("dot export") {
  const auto t = e2_trie();
  const auto plain = write_dot(t, std::nullopt);
  CHECK(plain.find("color=red") == std::string::npos);
  CHECK(plain == write_dot(t, std::nullopt));
  const auto marked = write_dot(t, DotHighlight{5, 1, 2});
  std::size_t reds = 0;
  for (auto pos = marked.find("color=red"); pos != std::string::npos;
       pos = marked.find("color=red", pos + 1)) {
    ++reds;
  }
  CHECK(reds == 4);
}
