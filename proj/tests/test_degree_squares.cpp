#include <doctest.h>

#include <algorithm>
#include <random>

#include "laglab/canonical.hpp"
#include "laglab/degree_squares.hpp"
#include "laglab/errors.hpp"
#include "oracles.hpp"

using namespace laglab;

namespace {

bool has(const std::vector<P2Structure>& v, P2Structure s) { return std::find(v.begin(), v.end(), s) != v.end(); }

}  // namespace

TEST_CASE("p2 examples") {
  CHECK(p2(ak_counterexample()) == 211);
  CHECK(p2(clique(4, 3)) == 36);
  CHECK(p2(star_graph(3, 4)) == 36);
  CHECK(p2_pair_identity(ak_counterexample()) == 211);
  CHECK(p2_pair_identity(RGraph::from_tuples(3, 3, {{1, 2, 3}})) == 3);
  CHECK(p2_pair_identity(RGraph::from_tuples(3, 6, {{1, 2, 3}, {4, 5, 6}})) == 6);
  CHECK(p2_star_value(3, 4) == 36);
  CHECK(p2_star_value(3, 11) == 253);
  CHECK(p2_star_value(2, 1) == 2);
}

TEST_CASE("p2 equals the pair-intersection sum") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const RGraph g = oracle::random_graph(rng, 2 + i % 4, 7 + i % 3, 0.3);
    CHECK(p2(g) == p2_pair_identity(g));
    CHECK(p2(g) == oracle::degree_square_sum(g));
  }
}

TEST_CASE("star value formula") {
  for (int r = 2; r <= 5; ++r) {
    for (int m = 0; m <= 30; ++m) CHECK(p2(star_graph(r, m)) == p2_star_value(r, m));
  }
  for (int r = 2; r <= 6; ++r) {
    for (int m = 1; m <= 30; ++m) CHECK(p2_max_unbounded(r, m).value == p2_star_value(r, m));
  }
  // Subgraphs of K_{r+1} with m edges reach the same value.
  for (int r = 2; r <= 6; ++r) {
    for (int m = 0; m <= r + 1; ++m) {
      CHECK(p2(clique_subgraph(r, m)) == p2_star_value(r, m));
      const std::int64_t mm = m;
      CHECK(mm * (mm - 1) * (mm - 1) + (r + 1 - mm) * mm * mm == p2_star_value(r, m));
    }
  }
}

TEST_CASE("unbounded maximizer structures") {
  const auto a = p2_max_unbounded(3, 4);
  CHECK(a.value == 36);
  CHECK(has(a.structures, P2Structure::star));
  CHECK(has(a.structures, P2Structure::clique_subgraph));
  const auto b = p2_max_unbounded(3, 12);
  CHECK(b.value == 300);
  CHECK(b.structures == std::vector<P2Structure>{P2Structure::star});
  CHECK(p2_max_unbounded(4, 2).value == 14);
  CHECK(oracle::brute_p2_max(4, 2, 6) == 14);
  CHECK(oracle::brute_p2_max(3, 4, 6) == 36);
}

TEST_CASE("classify_structure") {
  CHECK(has(classify_structure(star_graph(3, 5)), P2Structure::star));
  CHECK(classify_structure(clique(4, 3)) == std::vector<P2Structure>{P2Structure::clique_subgraph});
  CHECK(classify_structure(ak_counterexample()) == std::vector<P2Structure>{P2Structure::other});
}

TEST_CASE("bounded maximum against brute force") {
  for (int r = 2; r <= 3; ++r) {
    for (int t = r + 1; t <= 6; ++t) {
      for (int m = 1; m <= 5 && static_cast<std::uint64_t>(m) <= binomial(t, r); ++m) {
        const auto rep = p2_max_bounded(r, static_cast<std::uint64_t>(m), t);
        CHECK(rep.value == oracle::brute_p2_max(r, m, t));
        CHECK(rep.value <= p2_max_unbounded(r, m).value);
        if (t >= r - 1 + m) CHECK(rep.value == p2_max_unbounded(r, m).value);
        for (const auto& g : rep.maximizers) CHECK(p2(g) == rep.value);
      }
    }
  }
  CHECK(p2_max_bounded(2, 3, 3).value == 12);
  CHECK(p2_max_bounded(2, 3, 3).maximizers.size() == 1);
  CHECK(p2_max_bounded(3, 10, 5).value == 180);
  CHECK_THROWS_AS(p2_max_bounded(3, 11, 5), std::invalid_argument);
  BoundedSearchConfig tiny;
  tiny.cap = 10;
  CHECK_THROWS_AS(p2_max_bounded(3, 4, 6, tiny), std::invalid_argument);
}

TEST_CASE("bounded maximum of 11 triples on 7 vertices") {
  BoundedSearchConfig cfg;
  cfg.cap = 1e12;
  cfg.threads = 2;
  const auto rep = p2_max_bounded(3, 11, 7, cfg);
  CHECK(rep.value == 211);
  bool found = false;
  for (const auto& g : rep.maximizers) found = found || are_isomorphic(g, ak_counterexample());
  CHECK(found);
}

TEST_CASE("counterexample report") {
  const auto rep = verify_ak_counterexample();
  CHECK(rep.counterexample == 211);
  CHECK(rep.family_max == 209);
  CHECK(rep.counterexample_degrees == std::vector<int>{11, 5, 4, 4, 4, 4, 1});
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].t == 7);
  CHECK(rep.rows[0].lex == 209);
  CHECK(rep.rows[0].complement_of_lex == 207);
  CHECK(rep.rows[0].colex == 207);

  // Larger ground sets give lex families with more concentrated degrees.
  const auto wide = ak_counterexample_report(6, 12);
  CHECK_FALSE(wide.passed);
  CHECK(wide.family_max == 237);
  const std::vector<std::int64_t> lex{207, 209, 213, 213, 217, 225, 237};
  for (std::size_t i = 0; i < lex.size(); ++i) {
    CHECK(wide.rows[i].lex == lex[i]);
    const int t = 6 + static_cast<int>(i);
    const auto all = oracle::subsets(t, 3);
    CHECK(oracle::degree_square_sum(oracle::graph(3, t, {all.begin(), all.begin() + 11})) == lex[i]);
    const std::vector<oracle::Tuple> tail(all.end() - 11, all.end());
    CHECK(oracle::degree_square_sum(oracle::graph(3, t, tail)) == 207);
    CHECK(wide.rows[i].complement_of_lex == 207);
  }
  CHECK_THROWS_AS(verify_ak_counterexample(6, 12), VerificationFailure);
}
