#ifndef LAGLAB_EXTREMAL_SEARCH_HPP
#define LAGLAB_EXTREMAL_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "laglab/degree_squares.hpp"
#include "laglab/hypergraph.hpp"
#include "laglab/lagrangian.hpp"

namespace laglab {

/// Visits every left-compressed m-edge family on [t] exactly once. These are
/// the down-sets of the coordinatewise domination order on sorted r-tuples,
/// generated by an include/exclude walk over [t]^(r) in colex order (a linear
/// extension of domination), where a set may be included only when all its
/// unit down-shifts already are.
void for_each_left_compressed(int r, std::uint64_t m, int t, const std::function<void(const RGraph&)>& visit);
std::vector<RGraph> enumerate_left_compressed(int r, std::uint64_t m, int t);

/// One representative per isomorphism class of m-edge families on [t].
/// Requires t <= 10 and C(C(t,r), m) <= cap.
std::vector<RGraph> enumerate_all_up_to_iso(int r, std::uint64_t m, int t, double cap = 1e9, int threads = 1);

enum class SearchMode { left_compressed, all_up_to_iso };

std::string_view to_string(SearchMode mode);

struct SearchConfig {
  SearchMode mode = SearchMode::left_compressed;
  /// Full budget, used for colex and for re-runs near the leader.
  SolverConfig solver{};
  /// Starts per candidate on the first pass.
  int screening_starts = 16;
  /// Candidates within this of the leader after screening are re-run.
  double rerun_window = 1e-4;
  /// Tolerance for ties and for the colex verdict.
  double tol = 1e-8;
  /// Worker count over candidates; 0 resolves through LAGLAB_THREADS.
  int threads = 0;
  double cap = 1e9;
};

struct CandidateResult {
  /// Position in the candidate stream.
  std::uint64_t rank = 0;
  RGraph graph{2, 2};
  LagrangianCertificate certificate;
  bool rerun = false;
};

struct SearchReport {
  int r = 0;
  std::uint64_t m = 0;
  int t = 0;
  SearchMode mode = SearchMode::left_compressed;
  /// Largest Lagrangian over the search space.
  double best_value = 0.0;
  /// Candidates within tol of best_value.
  std::vector<RGraph> best_families;
  LagrangianCertificate best_certificate;
  RGraph colex{2, 2};
  LagrangianCertificate colex_certificate;
  double colex_value = 0.0;
  bool colex_is_max = false;
  /// colex_value - best_value.
  double margin = 0.0;
  std::vector<CandidateResult> candidates;
  /// Ranks of candidates whose solver did not converge.
  std::vector<std::uint64_t> nonconverged;
};

/// Maximizes the Lagrangian over the candidate stream and compares with
/// colex(m, r). Results are identical for every worker count.
SearchReport ff_verify(int r, std::uint64_t m, int t, const SearchConfig& config = {});

/// True iff every non-edge of g contains {t-i+1, ..., t}.
bool structure_check_nonedges(const RGraph& g, int i);

struct P2LinkVerdict {
  std::uint64_t a = 0;
  std::int64_t complement_p2 = 0;
  std::int64_t bounded_max = 0;
  double ratio = 1.0;
  /// Exact equality is asserted when a <= 3.
  bool equality_required = false;
  bool holds = false;
};

/// Compares P2 of the complement of a Lagrangian maximizer with P2(r, a, t).
P2LinkVerdict p2_link_check(const RGraph& best, const BoundedSearchConfig& config = {});

}  // namespace laglab

#endif  // LAGLAB_EXTREMAL_SEARCH_HPP
