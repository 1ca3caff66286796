#include "laglab/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace laglab {

namespace {

double falling_binomial(double x, int r) {
  double p = 1.0;
  for (int i = 0; i < r; ++i) p *= (x - i) / (i + 1);
  return p;
}

double clique_lagrangian(int t, int r) { return static_cast<double>(binomial(t, r)) / std::pow(t, r); }

}  // namespace

double mu(int i, int t, int r) {
  if (i < 0 || i > r || r > t) throw std::invalid_argument("mu requires 0 <= i <= r <= t");
  return static_cast<double>(binomial(t - i, r - i)) / std::pow(static_cast<double>(t), r - i);
}

ExpansionInput expansion_input(const RGraph& g) {
  const std::uint64_t total = binomial(g.t(), g.r());
  ExpansionInput in;
  in.t = g.t();
  in.r = g.r();
  in.a = total - g.size();
  if (in.a > binomial(g.t() - 2, g.r() - 2)) throw std::invalid_argument("expansion requires a <= C(t-2, r-2)");
  for (Vertex x = 1; x <= g.t(); ++x) {
    const auto e = static_cast<double>(nonedge_degree(g, x));
    in.sum_e_sq += e * e;
  }
  return in;
}

Expansion eval_lag_expansion(const ExpansionInput& in) {
  const int t = in.t;
  const int r = in.r;
  if (r < 2 || t < r) throw std::invalid_argument("expansion requires 2 <= r <= t");
  const auto a = static_cast<double>(in.a);
  if (in.a > binomial(t - 2, r - 2)) throw std::invalid_argument("expansion requires a <= C(t-2, r-2)");
  if (in.sum_e_sq < 0.0 || in.sum_e_sq > r * a * a) throw std::invalid_argument("sum of e(x)^2 out of range");

  const double td = t;
  const double mu0 = mu(0, t, r);
  const double mu2 = mu(2, t, r);
  Expansion out;
  out.value = mu0 - a / std::pow(td, r) + in.sum_e_sq / (2.0 * mu2 * std::pow(td, 2 * (r - 1))) -
              static_cast<double>(r) * r * a * a / (2.0 * mu2 * std::pow(td, 2 * r - 1));
  out.error_scale = a * a * a * std::pow(td, -3 * r + 4);
  return out;
}

ExpansionCheck check_expansion(int t, int r, std::uint64_t a, double constant, const SolverConfig& config) {
  if (r < 2 || t < r) throw std::invalid_argument("check_expansion requires 2 <= r <= t");
  const RGraph g = colex_segment(binomial(t, r) - a, r).with_vertex_count(t);
  const auto in = expansion_input(g);
  const auto ex = eval_lag_expansion(in);
  const auto cert = maximize_lagrangian(g, config);

  ExpansionCheck c;
  c.t = t;
  c.r = r;
  c.a = a;
  c.lambda = cert.value;
  c.expansion = ex.value;
  c.error_scale = ex.error_scale;
  c.constant = constant;
  c.converged = cert.converged;
  const double dev = std::abs(c.lambda - c.expansion);
  c.ratio = ex.error_scale > 0.0 ? dev / ex.error_scale : 0.0;
  c.holds = dev <= constant * ex.error_scale;
  return c;
}

double nikiforov_x(double m, int r) {
  if (r < 1) throw std::invalid_argument("nikiforov_x requires r >= 1");
  if (!(m >= 0.0)) throw std::invalid_argument("nikiforov_x requires m >= 0");
  const double lo0 = r - 1;
  if (m == 0.0) return lo0;

  double lo = lo0;
  double hi = r + m;
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (falling_binomial(mid, r) < m ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 4; ++i) {
    const double f = falling_binomial(x, r) - m;
    double dlog = 0.0;
    for (int k = 0; k < r; ++k) dlog += 1.0 / (x - k);
    const double df = (f + m) * dlog;
    if (!(df > 0.0) || !std::isfinite(df)) break;
    const double step = f / df;
    if (!std::isfinite(step) || std::abs(step) > 1.0) break;
    x -= step;
  }

  // Exact integer roots: C(n, r) == m in integer arithmetic.
  const double n = std::round(x);
  if (std::abs(x - n) < 1e-9 && n >= r && n <= 64 && static_cast<double>(binomial(static_cast<int>(n), r)) == m) {
    return n;
  }
  return x;
}

double nikiforov_bound(double m, int r) { return m * std::pow(nikiforov_x(m, r), -r); }

NikiforovVerdict check_nikiforov(std::uint64_t m, int r, double value, double tol) {
  if (m < 1) throw std::invalid_argument("check_nikiforov requires m >= 1");
  NikiforovVerdict v;
  v.m = m;
  v.r = r;
  v.x = nikiforov_x(static_cast<double>(m), r);
  v.bound = static_cast<double>(m) * std::pow(v.x, -r);
  v.value = value;
  v.slack = v.bound - value;
  v.holds = value <= v.bound + tol;
  v.integer_x = std::abs(v.x - std::round(v.x)) <= 1e-9;
  v.equality = std::abs(v.slack) <= tol;
  return v;
}

NikiforovVerdict check_nikiforov(const RGraph& g, const LagrangianCertificate& cert, double tol) {
  return check_nikiforov(g.size(), g.r(), cert.value, tol);
}

Weighting claim_weighting(int t) {
  if (t < 3) throw std::invalid_argument("claim_weighting requires t >= 3");
  const double big = 1.0 / (t - 1);
  std::vector<double> w(static_cast<std::size_t>(t), big);
  w[static_cast<std::size_t>(t - 2)] = 0.5 * big;
  w[static_cast<std::size_t>(t - 1)] = 0.5 * big;
  return Weighting(std::move(w));
}

HbVerdict lower_bound_hb(int t, int r, std::uint64_t b, const SolverConfig& config, double tol) {
  if (r < 2 || t < r + 1) throw std::invalid_argument("lower_bound_hb requires t > r >= 2");
  if (b > binomial(t - 2, r - 2)) throw std::invalid_argument("lower_bound_hb requires b <= C(t-2, r-2)");
  const RGraph h = colex_segment(binomial(t, r) - binomial(t - 2, r - 2) + b, r).with_vertex_count(t);
  const auto cert = maximize_lagrangian(h, config);

  HbVerdict v;
  v.t = t;
  v.r = r;
  v.b = b;
  v.lambda = cert.value;
  v.converged = cert.converged;
  v.smaller_clique = clique_lagrangian(t - 1, r);
  v.bound = v.smaller_clique + static_cast<double>(b) / (4.0 * std::pow(t - 1.0, r));
  v.constructive = weight_of(h, claim_weighting(t));
  v.holds = v.lambda >= v.bound - tol;
  v.constructive_matches = std::abs(v.constructive - v.bound) <= 1e-12;
  return v;
}

FaVerdict lower_bound_fa(int t, int r, std::uint64_t a, const SolverConfig& config, double tol) {
  if (r < 2 || t < r) throw std::invalid_argument("lower_bound_fa requires 2 <= r <= t");
  if (a > binomial(t - 2, r - 2)) throw std::invalid_argument("lower_bound_fa requires a <= C(t-2, r-2)");
  const RGraph f = colex_segment(binomial(t, r) - a, r).with_vertex_count(t);
  const auto cert = maximize_lagrangian(f, config);

  FaVerdict v;
  v.t = t;
  v.r = r;
  v.a = a;
  v.lambda = cert.value;
  v.converged = cert.converged;
  v.baseline = clique_lagrangian(t, r) - static_cast<double>(a) / std::pow(static_cast<double>(t), r);
  v.surplus = v.lambda - v.baseline;
  v.holds = v.lambda >= v.baseline - tol;
  return v;
}

std::vector<FaVerdict> fa_surplus_series(int t, int r, std::uint64_t a_max, const SolverConfig& config) {
  std::vector<FaVerdict> out;
  for (std::uint64_t a = 0; a <= a_max; ++a) out.push_back(lower_bound_fa(t, r, a, config));
  return out;
}

double weight_one_bound_value(int t, int r, std::uint64_t a) {
  if (r < 2 || t < r) throw std::invalid_argument("weight_one_bound requires 2 <= r <= t");
  const auto total = static_cast<double>(binomial(t, r));
  if (static_cast<double>(a) > total) throw std::invalid_argument("weight_one_bound requires a <= C(t, r)");
  return 1.0 - (1.0 - 1.0 / t) * std::pow(1.0 - static_cast<double>(a) / total, 1.0 / (r - 1));
}

WeightOneVerdict weight_one_bound(int t, int r, std::uint64_t a, double w1, double tol) {
  WeightOneVerdict v;
  v.w1 = w1;
  v.bound = weight_one_bound_value(t, r, a);
  v.holds = w1 <= v.bound + tol;
  return v;
}

MissingEdgeVerdict missing_edge_bound(const RGraph& g, std::uint64_t a) {
  if (binomial(g.t(), g.r()) - g.size() != a) throw std::invalid_argument("a must equal the non-edge count");
  MissingEdgeVerdict v;
  v.e1 = nonedge_degree(g, 1);
  v.bound = static_cast<double>(g.r()) * static_cast<double>(a) / g.t();
  v.holds = static_cast<double>(v.e1) <= v.bound;
  return v;
}

}  // namespace laglab
