#include <doctest.h>

#include <cmath>

#include "laglab/asymptotics.hpp"
#include "laglab/extremal_search.hpp"

using namespace laglab;

TEST_CASE("mu") {
  CHECK(mu(0, 10, 3) == doctest::Approx(0.12).epsilon(1e-15));
  CHECK(mu(2, 10, 3) == doctest::Approx(0.8).epsilon(1e-15));
  for (int t = 3; t <= 30; ++t) CHECK(mu(3, t, 3) == 1.0);
  CHECK_THROWS(mu(4, 10, 3));
}

TEST_CASE("expansion formula") {
  const auto zero = eval_lag_expansion({10, 3, 0, 0.0});
  CHECK(zero.value == doctest::Approx(0.12).epsilon(1e-15));
  CHECK(zero.error_scale == 0.0);

  const auto one = eval_lag_expansion({10, 3, 1, 3.0});
  CHECK(std::abs(one.value - 0.11913125) <= 1e-15);
  CHECK(one.error_scale == doctest::Approx(1e-5).epsilon(1e-12));

  const double mu0 = 1140.0 / 8000.0;
  const double mu2 = 18.0 / 20.0;
  const double want = mu0 - 1.0 / 8000 + 3.0 / (2 * mu2 * std::pow(20.0, 4)) - 9.0 / (2 * mu2 * std::pow(20.0, 5));
  CHECK(std::abs(eval_lag_expansion({20, 3, 1, 3.0}).value - want) <= 1e-16);

  // The a = 0 term is the clique Lagrangian.
  for (int t = 4; t <= 12; ++t) {
    const double clique_value = static_cast<double>(binomial(t, 3)) / std::pow(t, 3);
    CHECK(eval_lag_expansion(expansion_input(clique(t, 3))).value == doctest::Approx(clique_value).epsilon(1e-15));
  }

  const auto in = expansion_input(colex_segment(binomial(10, 3) - 1, 3).with_vertex_count(10));
  CHECK(in.a == 1);
  CHECK(in.sum_e_sq == 3.0);
  CHECK_THROWS(eval_lag_expansion({10, 3, 9, 0.0}));
  CHECK_THROWS(eval_lag_expansion({10, 3, 2, 13.0}));
}

TEST_CASE("expansion tracks the solver on colex tails") {
  SolverConfig cfg;
  cfg.starts = 4;
  for (int t : {20, 30}) {
    for (std::uint64_t a = 1; a <= 5; ++a) {
      const auto c = check_expansion(t, 3, a, 50.0, cfg);
      CHECK(c.converged);
      CHECK(c.holds);
      CHECK(c.ratio < 5.0);
    }
  }
}

TEST_CASE("real binomial root") {
  CHECK(nikiforov_x(10, 3) == 5.0);
  CHECK(nikiforov_x(56, 3) == 8.0);
  for (int r = 2; r <= 5; ++r) CHECK(nikiforov_x(0, r) == r - 1);
  for (int r = 2; r <= 4; ++r) {
    for (int n = r; n <= 12; ++n) CHECK(nikiforov_x(static_cast<double>(binomial(n, r)), r) == n);
  }
  double prev = nikiforov_x(0, 3);
  for (double m = 0.5; m <= 300; m += 0.5) {
    const double x = nikiforov_x(m, 3);
    CHECK(x > prev);
    CHECK(x * (x - 1) * (x - 2) / 6 == doctest::Approx(m).epsilon(1e-11));
    prev = x;
  }
}

TEST_CASE("Nikiforov bound") {
  CHECK(nikiforov_bound(10, 3) == doctest::Approx(0.08).epsilon(1e-15));
  CHECK(nikiforov_bound(20, 3) == doctest::Approx(20.0 / 216).epsilon(1e-15));

  const auto k5 = maximize_lagrangian(clique(5, 3));
  const auto v10 = check_nikiforov(clique(5, 3), k5);
  CHECK(v10.holds);
  CHECK(v10.equality);
  CHECK(v10.integer_x);

  const RGraph c11 = colex_segment(11, 3);
  const auto v11 = check_nikiforov(c11, maximize_lagrangian(c11));
  CHECK(v11.holds);
  CHECK_FALSE(v11.equality);
  CHECK_FALSE(v11.integer_x);
  CHECK(v11.slack > 1e-4);
  const double x = v11.x;
  CHECK(x * (x - 1) * (x - 2) == doctest::Approx(66.0).epsilon(1e-12));

  CHECK_FALSE(check_nikiforov(10, 3, 0.09).holds);
}

TEST_CASE("constructive weighting") {
  const auto w10 = claim_weighting(10);
  for (Vertex v = 1; v <= 8; ++v) CHECK(w10[v] == doctest::Approx(1.0 / 9).epsilon(1e-15));
  CHECK(w10[9] == doctest::Approx(1.0 / 18).epsilon(1e-15));
  CHECK(w10[10] == doctest::Approx(1.0 / 18).epsilon(1e-15));
  const auto w3 = claim_weighting(3);
  CHECK(w3[1] == 0.5);
  CHECK(w3[2] == 0.25);
  CHECK(w3[3] == 0.25);
  for (int t = 3; t <= 50; ++t) {
    double s = 0.0;
    const Weighting w = claim_weighting(t);
    for (double x : w.values()) s += x;
    CHECK(std::abs(s - 1.0) <= 1e-14);
    // (t-2)/(t-1) + 2/(2(t-1)) = 1 in exact arithmetic.
    CHECK((t - 2) * 2 + 2 == 2 * (t - 1));
  }
}

TEST_CASE("H_b lower bound") {
  const auto b0 = lower_bound_hb(7, 3, 0);
  CHECK(b0.holds);
  CHECK(b0.lambda >= b0.smaller_clique - 1e-12);
  const auto b3 = lower_bound_hb(7, 3, 3);
  CHECK(b3.holds);
  CHECK(b3.converged);
  CHECK(b3.lambda - b3.bound == doctest::Approx(0.00126643).epsilon(1e-5));
  for (std::uint64_t b : {1, 2}) {
    const auto v = lower_bound_hb(7, 3, b);
    CHECK(v.constructive_matches);
    CHECK(v.constructive - v.smaller_clique == doctest::Approx(static_cast<double>(b) / (4 * std::pow(6.0, 3))).epsilon(1e-12));
  }
}

TEST_CASE("F_a lower bound") {
  const auto a0 = lower_bound_fa(7, 3, 0);
  CHECK(a0.holds);
  CHECK(std::abs(a0.surplus) <= 1e-12);
  const auto a1 = lower_bound_fa(7, 3, 1);
  CHECK(a1.holds);
  CHECK(a1.surplus > 0.0);
  const auto series = fa_surplus_series(8, 3, 4);
  CHECK(series.size() == 5);
  for (const auto& v : series) CHECK(v.holds);
}

TEST_CASE("weight of the heaviest vertex") {
  CHECK(weight_one_bound_value(8, 3, 0) == doctest::Approx(1.0 / 8).epsilon(1e-15));
  CHECK(weight_one_bound(8, 3, 0, 1.0 / 8).holds);
  CHECK(weight_one_bound_value(10, 3, 5) == doctest::Approx(1 - 0.9 * std::sqrt(115.0 / 120)).epsilon(1e-15));
  const auto cert = maximize_lagrangian(colex_segment(34, 3));
  CHECK(weight_one_bound(7, 3, 1, cert.decreasing_witness()[1]).holds);
}

TEST_CASE("missing edges through vertex 1") {
  const auto a1 = missing_edge_bound(colex_segment(34, 3), 1);
  CHECK(a1.e1 == 0);
  CHECK(a1.holds);
  // The five colex-largest triples of [7] are {x,6,7}, x = 1..5.
  const auto a5 = missing_edge_bound(colex_segment(30, 3).with_vertex_count(7), 5);
  CHECK(a5.e1 == 1);
  CHECK(a5.holds);
  // Non-edges {1,2,x} for x = 3..7: the shape a maximizer never takes.
  std::vector<EdgeMask> edges;
  const RGraph k7 = clique(7, 3);
  for (EdgeMask e : k7.edges()) {
    if (!((e & make_set({1, 2})) == make_set({1, 2}))) edges.push_back(e);
  }
  const RGraph star_gap(3, 7, edges);
  const auto bad = missing_edge_bound(star_gap, 5);
  CHECK(bad.e1 == 5);
  CHECK_FALSE(bad.holds);
  CHECK_THROWS(missing_edge_bound(star_gap, 4));
}
