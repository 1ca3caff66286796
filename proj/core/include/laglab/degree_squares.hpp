#ifndef LAGLAB_DEGREE_SQUARES_HPP
#define LAGLAB_DEGREE_SQUARES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "laglab/hypergraph.hpp"

namespace laglab {

enum class P2Structure { star, clique_subgraph, other };

std::string_view to_string(P2Structure s);

/// Sum of squared degrees.
std::int64_t p2(const RGraph& g);
/// Sum over ordered edge pairs (e, f) of |e ∩ f|; equals p2.
std::int64_t p2_pair_identity(const RGraph& g);
/// (r - 1) m^2 + m, the value of a star with m edges.
std::int64_t p2_star_value(int r, std::int64_t m);

/// m edges sharing the core {1, ..., r-1}, on t = r - 1 + m vertices.
RGraph star_graph(int r, int m);
/// The first m edges (colex) of the clique on r + 1 vertices.
RGraph clique_subgraph(int r, int m);

/// star: some (r-1)-set lies in every edge. clique_subgraph: at most r + 1
/// vertices are covered. other: neither. Empty graphs are tagged as both.
std::vector<P2Structure> classify_structure(const RGraph& g);

struct P2Report {
  int r = 0;
  std::uint64_t m = 0;
  /// 0 for the unbounded problem.
  int t = 0;
  std::int64_t value = 0;
  /// Degree sequence of the first maximizer.
  std::vector<int> degree_sequence;
  /// Union of structure tags over all maximizers.
  std::vector<P2Structure> structures;
  /// One representative per isomorphism class (canonical labels).
  std::vector<RGraph> maximizers;
  /// Classes kept after pruning, per level (bounded search only).
  std::vector<std::uint64_t> classes_per_level;
};

P2Report p2_max_unbounded(int r, std::int64_t m);

struct BoundedSearchConfig {
  /// Upper limit on C(C(t,r), m), the raw number of m-edge families.
  double cap = 1e9;
  int threads = 1;
};

/// Exact P2(r, m, t) with every maximizer up to isomorphism. Families are
/// grown one edge at a time, deduplicated by canonical form at each level and
/// pruned when a degree-based upper bound falls below the best known value.
/// Requires t <= 10 and the raw family count within config.cap.
P2Report p2_max_bounded(int r, std::uint64_t m, int t, const BoundedSearchConfig& config = {});

/// The 11-edge 3-graph on [7] with P2 = 211.
RGraph ak_counterexample();

struct AkFamilyRow {
  int t = 0;
  std::int64_t lex = 0;
  std::int64_t complement_of_lex = 0;
  /// colex(11,3), listed for reference; -1 when it does not fit in [t].
  std::int64_t colex = -1;
};

struct AkReport {
  std::int64_t counterexample = 0;
  std::vector<int> counterexample_degrees;
  std::vector<AkFamilyRow> rows;
  std::int64_t family_max = 0;
  RGraph family_max_graph{3, 3};
  std::int64_t claimed_family_bound = 209;
  bool passed = false;
  /// First failing assertion; empty when passed.
  std::string failure;
};

/// Computes P2 of the counterexample and of lex(11,t,3) and the complement of
/// lex(C(t,3)-11,t,3) for t in [t_min, t_max]; never throws on a failed claim.
AkReport ak_counterexample_report(int t_min = 7, int t_max = 7);
/// As above, throwing VerificationFailure when a claim fails.
AkReport verify_ak_counterexample(int t_min = 7, int t_max = 7);

}  // namespace laglab

#endif  // LAGLAB_DEGREE_SQUARES_HPP
