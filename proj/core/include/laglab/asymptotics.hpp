#ifndef LAGLAB_ASYMPTOTICS_HPP
#define LAGLAB_ASYMPTOTICS_HPP

#include <cstdint>
#include <vector>

#include "laglab/hypergraph.hpp"
#include "laglab/lagrangian.hpp"

namespace laglab {

/// mu_i = C(t-i, r-i) / t^(r-i).
double mu(int i, int t, int r);

/// Inputs of the near-clique expansion: t, r, the non-edge count a and the
/// sum over vertices of e(x)^2.
struct ExpansionInput {
  int t = 0;
  int r = 0;
  std::uint64_t a = 0;
  double sum_e_sq = 0.0;
};

/// Reads a and sum e(x)^2 off a graph on [t]. Throws if a > C(t-2, r-2).
ExpansionInput expansion_input(const RGraph& g);

struct Expansion {
  double value = 0.0;
  /// a^3 t^(4-3r), the size of the dropped remainder up to a constant.
  double error_scale = 0.0;
};

/// mu_0 - a/t^r + sum e(x)^2 / (2 mu_2 t^(2(r-1))) - r^2 a^2 / (2 mu_2 t^(2r-1)).
Expansion eval_lag_expansion(const ExpansionInput& in);

struct ExpansionCheck {
  int t = 0;
  int r = 0;
  std::uint64_t a = 0;
  double lambda = 0.0;
  double expansion = 0.0;
  double error_scale = 0.0;
  /// |lambda - expansion| / error_scale.
  double ratio = 0.0;
  double constant = 0.0;
  bool holds = false;
  bool converged = false;
};

/// Solves colex(C(t,r) - a, r) on [t] (non-edges form the colex tail) and
/// compares with the expansion: holds iff |lambda - expansion| <= constant * error_scale.
ExpansionCheck check_expansion(int t, int r, std::uint64_t a, double constant, const SolverConfig& config = {});

/// The real x >= r-1 with x(x-1)...(x-r+1)/r! = m. Bisection then Newton;
/// returns the integer exactly when m is a binomial coefficient C(n, r).
double nikiforov_x(double m, int r);
/// m * x^(-r).
double nikiforov_bound(double m, int r);

struct NikiforovVerdict {
  std::uint64_t m = 0;
  int r = 0;
  double x = 0.0;
  double bound = 0.0;
  double value = 0.0;
  /// bound - value.
  double slack = 0.0;
  bool holds = false;
  bool integer_x = false;
  /// |value - bound| <= tol.
  bool equality = false;
};

NikiforovVerdict check_nikiforov(std::uint64_t m, int r, double value, double tol = 1e-8);
NikiforovVerdict check_nikiforov(const RGraph& g, const LagrangianCertificate& cert, double tol = 1e-8);

/// 1/(t-1) on [t-2] and 1/(2(t-1)) on t-1 and t.
Weighting claim_weighting(int t);

struct HbVerdict {
  int t = 0;
  int r = 0;
  std::uint64_t b = 0;
  double lambda = 0.0;
  double smaller_clique = 0.0;
  /// lambda(K_{t-1}) + b / (4 (t-1)^r).
  double bound = 0.0;
  /// Weight of H_b under claim_weighting(t).
  double constructive = 0.0;
  bool holds = false;
  bool constructive_matches = false;
  bool converged = false;
};

/// H_b = colex(C(t,r) - C(t-2,r-2) + b, r): solver value against
/// lambda(K_{t-1}) + b/(4(t-1)^r), and the explicit weighting reproducing it.
HbVerdict lower_bound_hb(int t, int r, std::uint64_t b, const SolverConfig& config = {}, double tol = 1e-8);

struct FaVerdict {
  int t = 0;
  int r = 0;
  std::uint64_t a = 0;
  double lambda = 0.0;
  /// lambda(K_t) - a/t^r.
  double baseline = 0.0;
  /// lambda - baseline; the measured second-order gain.
  double surplus = 0.0;
  bool holds = false;
  bool converged = false;
};

/// F_a = colex(C(t,r) - a, r) against lambda(K_t) - a/t^r.
FaVerdict lower_bound_fa(int t, int r, std::uint64_t a, const SolverConfig& config = {}, double tol = 1e-8);
/// Diagnostic series over a = 0..a_max; monotonicity is reported, not asserted.
std::vector<FaVerdict> fa_surplus_series(int t, int r, std::uint64_t a_max, const SolverConfig& config = {});

struct WeightOneVerdict {
  double w1 = 0.0;
  double bound = 0.0;
  bool holds = false;
};

/// 1 - (1 - 1/t)(1 - a/C(t,r))^(1/(r-1)).
double weight_one_bound_value(int t, int r, std::uint64_t a);
WeightOneVerdict weight_one_bound(int t, int r, std::uint64_t a, double w1, double tol = 1e-12);

struct MissingEdgeVerdict {
  std::uint64_t e1 = 0;
  double bound = 0.0;
  bool holds = false;
};

/// e(1) <= r a / t for a left-compressed g with a non-edges.
MissingEdgeVerdict missing_edge_bound(const RGraph& g, std::uint64_t a);

}  // namespace laglab

#endif  // LAGLAB_ASYMPTOTICS_HPP
