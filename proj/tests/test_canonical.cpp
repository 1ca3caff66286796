#include <doctest.h>

#include <map>
#include <random>

#include "laglab/canonical.hpp"
#include "laglab/degree_squares.hpp"
#include "laglab/extremal_search.hpp"
#include "oracles.hpp"

using namespace laglab;

TEST_CASE("canonical form is invariant under relabeling") {
  const RGraph h = ak_counterexample();
  const auto base = canonical_form(h);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const auto sigma = oracle::random_permutation(rng, h.t());
    CHECK(canonical_form(permute(h, sigma)) == base);
  }
  for (int i = 0; i < 60; ++i) {
    const RGraph g = oracle::random_graph(rng, 3, 7, 0.3);
    const auto sigma = oracle::random_permutation(rng, 7);
    CHECK(canonical_form(permute(g, sigma)) == canonical_form(g));
  }
}

TEST_CASE("canonical form separates exactly the brute-force classes") {
  // Brute-force canonical labels over all t! relabelings partition the same way.
  std::mt19937_64 rng(2);
  std::vector<RGraph> pool;
  for (int i = 0; i < 120; ++i) pool.push_back(oracle::random_graph(rng, 3, 6, 0.15));
  for (int i = 0; i < 40; ++i) pool.push_back(permute(pool[static_cast<std::size_t>(i)], oracle::random_permutation(rng, 6)));
  std::map<std::vector<std::uint64_t>, CanonicalForm> seen;
  for (const auto& g : pool) {
    const auto brute = oracle::brute_canonical(g);
    const auto ours = canonical_form(g);
    auto [it, inserted] = seen.emplace(brute, ours);
    if (!inserted) CHECK(it->second == ours);
  }
  std::map<CanonicalForm, std::vector<std::uint64_t>> back;
  for (const auto& [brute, ours] : seen) {
    auto [it, inserted] = back.emplace(ours, brute);
    if (!inserted) CHECK(it->second == brute);
  }
}

TEST_CASE("isomorphism examples") {
  CHECK(are_isomorphic(RGraph::from_tuples(3, 5, {{1, 2, 3}}), RGraph::from_tuples(3, 5, {{2, 4, 5}})));
  CHECK_FALSE(are_isomorphic(colex_segment(4, 3).with_vertex_count(6), star_graph(3, 4)));
  CHECK(are_isomorphic(colex_segment(4, 3), clique(4, 3).with_vertex_count(6)));
  CHECK_FALSE(are_isomorphic(clique(4, 3), clique(4, 2)));
  CHECK_THROWS_AS(canonical_form(RGraph(3, 11)), std::invalid_argument);
}

TEST_CASE("isomorphism class counts") {
  CHECK(enumerate_all_up_to_iso(2, 2, 4).size() == 2);
  // Two triples inside [5] always meet, so only |e & f| in {1, 2} occurs.
  CHECK(enumerate_all_up_to_iso(3, 2, 5).size() == 2);
  CHECK(enumerate_all_up_to_iso(3, 2, 6).size() == 3);
  // Graphs on 4 vertices: 1, 1, 2, 3, 2, 1, 1 classes by edge count.
  const std::vector<std::size_t> four{1, 1, 2, 3, 2, 1, 1};
  for (std::uint64_t m = 0; m <= 6; ++m) CHECK(enumerate_all_up_to_iso(2, m, 4).size() == four[m]);
  // Graphs on 5 vertices total 34 classes.
  std::size_t total = 0;
  for (std::uint64_t m = 0; m <= 10; ++m) total += enumerate_all_up_to_iso(2, m, 5).size();
  CHECK(total == 34);
}

TEST_CASE("class enumeration agrees with brute force and ignores thread count") {
  for (int m = 1; m <= 4; ++m) {
    const auto all = oracle::subsets(5, 3);
    std::set<std::vector<std::uint64_t>> classes;
    oracle::for_each_combination(all.size(), static_cast<std::size_t>(m), [&](const std::vector<std::size_t>& idx) {
      std::vector<oracle::Tuple> edges;
      for (auto i : idx) edges.push_back(all[i]);
      classes.insert(oracle::brute_canonical(oracle::graph(3, 5, edges)));
    });
    const auto one = grow_isomorphism_classes(3, static_cast<std::uint64_t>(m), 5, 1);
    const auto many = grow_isomorphism_classes(3, static_cast<std::uint64_t>(m), 5, 4);
    CHECK(one.size() == classes.size());
    CHECK(one == many);
  }
}
