#include <doctest.h>

#include <random>
#include <sstream>

#include "laglab/edge_list.hpp"
#include "oracles.hpp"

using namespace laglab;

TEST_CASE("edge lists round-trip byte for byte") {
  const std::string text = "3 5 3\n1 2 3\n1 2 4\n1 3 4\n";
  const RGraph g = parse_edge_list(text);
  CHECK(g == colex_segment(3, 3).with_vertex_count(5));
  CHECK(format_edge_list(g) == text);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 40; ++i) {
    const RGraph h = oracle::random_graph(rng, 2 + i % 3, 8, 0.3);
    const auto s = format_edge_list(h);
    CHECK(parse_edge_list(s) == h);
    CHECK(format_edge_list(parse_edge_list(s)) == s);
  }
}

TEST_CASE("edge list reader accepts comments and blank lines") {
  const RGraph g = parse_edge_list("# header follows\n\n3 4 2   # r t m\n2 3 4\n\n1 2 3 # first\n");
  CHECK(g.size() == 2);
  CHECK(g.contains(make_set({2, 3, 4})));
  CHECK(format_edge_list(g) == "3 4 2\n1 2 3\n2 3 4\n");
  CHECK(parse_edge_list("3 5 0\n").empty());
}

TEST_CASE("edge list reader rejects malformed input") {
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 4 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 4 1\n1 3 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 4 1\n1 2 5\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 4 2\n1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 4 1\n1 2 3\n1 2 4\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 4 2\n1 2 3\n1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 4 1\n1 2 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("1 4 0\n"), ParseError);
  try {
    parse_edge_list("3 4 1\n\n1 2 9\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}
