#include "laglab/degree_squares.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "laglab/canonical.hpp"
#include "laglab/errors.hpp"
#include "laglab/parallel.hpp"

namespace laglab {

namespace {

std::int64_t sum_squares(const std::vector<int>& d) {
  std::int64_t s = 0;
  for (int x : d) s += static_cast<std::int64_t>(x) * x;
  return s;
}

// Upper bound on the final P2 after adding k more edges to a family with
// degrees d, each vertex degree capped at max_degree. Splits the increase as
// 2 sum d*delta (a box-constrained LP, solved greedily) plus sum delta^2 <= r k^2.
std::int64_t p2_upper_bound(std::vector<int> d, int r, std::int64_t k, std::int64_t max_degree) {
  std::int64_t base = sum_squares(d);
  if (k == 0) return base;
  std::sort(d.begin(), d.end(), std::greater<>());
  std::int64_t budget = static_cast<std::int64_t>(r) * k;
  std::int64_t linear = 0;
  for (int x : d) {
    if (budget == 0) break;
    const std::int64_t take = std::min({budget, k, max_degree - x});
    if (take <= 0) continue;
    linear += static_cast<std::int64_t>(x) * take;
    budget -= take;
  }
  return base + 2 * linear + static_cast<std::int64_t>(r) * k * k;
}

double log_binomial(double n, double k) {
  return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

void append_unique(std::vector<P2Structure>& tags, P2Structure s) {
  if (std::find(tags.begin(), tags.end(), s) == tags.end()) tags.push_back(s);
}

}  // namespace

std::string_view to_string(P2Structure s) {
  switch (s) {
    case P2Structure::star:
      return "star";
    case P2Structure::clique_subgraph:
      return "clique_subgraph";
    case P2Structure::other:
      return "other";
  }
  return "other";
}

std::int64_t p2(const RGraph& g) { return sum_squares(degree_sequence(g)); }

std::int64_t p2_pair_identity(const RGraph& g) {
  std::int64_t total = 0;
  for (EdgeMask e : g.edges()) {
    for (EdgeMask f : g.edges()) total += set_size(e & f);
  }
  return total;
}

std::int64_t p2_star_value(int r, std::int64_t m) {
  if (r < 2 || m < 0) throw std::invalid_argument("p2_star_value requires r >= 2 and m >= 0");
  return static_cast<std::int64_t>(r - 1) * m * m + m;
}

RGraph star_graph(int r, int m) {
  if (r < 2 || m < 0) throw std::invalid_argument("star_graph requires r >= 2 and m >= 0");
  const int t = std::max(r, r - 1 + m);
  if (t > kMaxVertices) throw std::invalid_argument("star does not fit in 64 vertices");
  VertexSet core = vertex_bit(r) - 1;
  std::vector<EdgeMask> edges;
  for (int i = 0; i < m; ++i) edges.push_back(core | vertex_bit(r + i));
  return RGraph(r, t, std::move(edges));
}

RGraph clique_subgraph(int r, int m) {
  if (m < 0 || m > r + 1) throw std::invalid_argument("clique_subgraph requires 0 <= m <= r + 1");
  std::vector<EdgeMask> edges;
  for (int i = 0; i < m; ++i) edges.push_back(colex_unrank(static_cast<std::uint64_t>(i), r));
  return RGraph(r, r + 1, std::move(edges));
}

std::vector<P2Structure> classify_structure(const RGraph& g) {
  std::vector<P2Structure> tags;
  VertexSet common = ~VertexSet{0};
  VertexSet covered = 0;
  for (EdgeMask e : g.edges()) {
    common &= e;
    covered |= e;
  }
  if (g.empty() || set_size(common) >= g.r() - 1) tags.push_back(P2Structure::star);
  if (set_size(covered) <= g.r() + 1) tags.push_back(P2Structure::clique_subgraph);
  if (tags.empty()) tags.push_back(P2Structure::other);
  return tags;
}

P2Report p2_max_unbounded(int r, std::int64_t m) {
  if (r < 2 || m < 1) throw std::invalid_argument("p2_max_unbounded requires r >= 2 and m >= 1");
  P2Report report;
  report.r = r;
  report.m = static_cast<std::uint64_t>(m);
  report.value = p2_star_value(r, m);
  report.structures.push_back(P2Structure::star);
  if (r - 1 + m <= kMaxVertices) {
    report.maximizers.push_back(star_graph(r, static_cast<int>(m)));
    report.degree_sequence = degree_sequence(report.maximizers.front());
  }
  if (m <= r + 1) {
    report.structures.push_back(P2Structure::clique_subgraph);
    // Two edges of K_{r+1} already share r - 1 vertices, so the families differ only from m = 3.
    if (m >= 3) report.maximizers.push_back(clique_subgraph(r, static_cast<int>(m)));
  }
  return report;
}

P2Report p2_max_bounded(int r, std::uint64_t m, int t, const BoundedSearchConfig& config) {
  if (r < 2 || t < r) throw std::invalid_argument("p2_max_bounded requires 2 <= r <= t");
  if (t > kCanonicalMaxVertices) throw std::invalid_argument("p2_max_bounded supports t <= 10");
  const std::uint64_t total = binomial(t, r);
  if (m > total) throw std::invalid_argument("p2_max_bounded requires m <= C(t, r)");
  if (log_binomial(static_cast<double>(total), static_cast<double>(m)) > std::log(config.cap) + 1e-9) {
    throw std::invalid_argument("p2_max_bounded: search space exceeds the configured cap");
  }
  const auto max_degree = static_cast<std::int64_t>(binomial(t - 1, r - 1));

  // Best value attained by explicit m-edge families on [t]; pruning keeps ties.
  std::int64_t lower = p2(lex_segment(m, t, r));
  lower = std::max(lower, p2(complement(lex_segment(total - m, t, r))));
  if (m <= binomial(t, r)) {
    const RGraph colex = colex_segment(m, r);
    if (colex.t() <= t) lower = std::max(lower, p2(colex));
  }
  if (static_cast<std::uint64_t>(r - 1) + m <= static_cast<std::uint64_t>(t)) {
    lower = std::max(lower, p2_star_value(r, static_cast<std::int64_t>(m)));
  }

  P2Report report;
  report.r = r;
  report.m = m;
  report.t = t;

  const auto level = grow_isomorphism_classes(
      r, m, t, resolve_threads(config.threads),
      [&](const RGraph& child, std::uint64_t remaining) {
        return p2_upper_bound(degree_sequence(child), r, static_cast<std::int64_t>(remaining), max_degree) >= lower;
      },
      &report.classes_per_level);

  std::int64_t best = -1;
  for (const auto& form : level) best = std::max(best, p2(RGraph(r, t, form.edges)));
  report.value = best;
  for (const auto& form : level) {
    RGraph g(r, t, form.edges);
    if (p2(g) != best) continue;
    for (P2Structure s : classify_structure(g)) append_unique(report.structures, s);
    report.maximizers.push_back(std::move(g));
  }
  if (!report.maximizers.empty()) report.degree_sequence = degree_sequence(report.maximizers.front());
  return report;
}

RGraph ak_counterexample() {
  return RGraph::from_tuples(3, 7,
                             {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 2, 7}, {1, 3, 4},
                              {1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {1, 5, 6}});
}

AkReport ak_counterexample_report(int t_min, int t_max) {
  constexpr std::uint64_t kEdges = 11;
  if (t_min < 6 || t_max < t_min || t_max > kMaxVertices) {
    throw std::invalid_argument("t range must satisfy 6 <= t_min <= t_max <= 64");
  }
  AkReport report;
  const RGraph h = ak_counterexample();
  report.counterexample = p2(h);
  report.counterexample_degrees = degree_sequence(h);

  const RGraph colex = colex_segment(kEdges, 3);
  report.family_max = -1;
  for (int t = t_min; t <= t_max; ++t) {
    AkFamilyRow row;
    row.t = t;
    const RGraph lex = lex_segment(kEdges, t, 3);
    const RGraph comp = complement(lex_segment(binomial(t, 3) - kEdges, t, 3));
    row.lex = p2(lex);
    row.complement_of_lex = p2(comp);
    if (colex.t() <= t) row.colex = p2(colex);
    if (row.lex > report.family_max) {
      report.family_max = row.lex;
      report.family_max_graph = lex;
    }
    if (row.complement_of_lex > report.family_max) {
      report.family_max = row.complement_of_lex;
      report.family_max_graph = comp;
    }
    report.rows.push_back(row);
  }

  if (report.counterexample != 211) {
    report.failure = "P2 of the counterexample is " + std::to_string(report.counterexample) + ", expected 211";
  } else if (report.family_max > report.claimed_family_bound) {
    report.failure = "lex/complement-of-lex maximum is " + std::to_string(report.family_max) + " > 209";
  } else if (!(report.counterexample > report.family_max)) {
    report.failure = "counterexample does not beat the lex/colex family";
  }
  report.passed = report.failure.empty();
  return report;
}

AkReport verify_ak_counterexample(int t_min, int t_max) {
  AkReport report = ak_counterexample_report(t_min, t_max);
  if (!report.passed) throw VerificationFailure(report.failure);
  return report;
}

}  // namespace laglab
