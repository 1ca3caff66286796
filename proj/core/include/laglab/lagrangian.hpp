#ifndef LAGLAB_LAGRANGIAN_HPP
#define LAGLAB_LAGRANGIAN_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "laglab/hypergraph.hpp"

namespace laglab {

/// A point of the probability simplex on [t]: nonnegative, summing to 1.
class Weighting {
 public:
  static constexpr double kSumTolerance = 1e-12;

  /// Empty placeholder (t = 0).
  Weighting() = default;
  /// Throws std::invalid_argument on negative, non-finite or non-normalized input.
  explicit Weighting(std::vector<double> weights);

  static Weighting uniform(int t);
  /// Uniform on the given support, zero elsewhere.
  static Weighting uniform_on(int t, VertexSet support);

  int size() const { return static_cast<int>(w_.size()); }
  /// 1-based access.
  double operator[](Vertex v) const { return w_[static_cast<std::size_t>(v - 1)]; }
  std::span<const double> values() const { return w_; }

  bool is_decreasing() const;
  VertexSet support() const;

  friend bool operator==(const Weighting&, const Weighting&) = default;

 private:
  std::vector<double> w_;
};

/// Raised when an intermediate solver quantity is NaN or infinite.
class NumericalFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// w(G) = sum over edges of the product of vertex weights.
double weight_of(const RGraph& g, const Weighting& w);
/// w(N_G(S)); requires |S| < r.
double link_weight(const RGraph& g, const Weighting& w, VertexSet s);
/// w(N_y(x)): link of x restricted to sets avoiding y.
double link_weight_avoiding(const RGraph& g, const Weighting& w, Vertex x, Vertex y);
/// Partial derivatives of w(G); entry x-1 equals w(N(x)).
std::vector<double> gradient(const RGraph& g, const Weighting& w);

struct SolverConfig {
  int starts = 64;
  int max_iters = 100000;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  int threads = 1;
  /// Weights below this are set to zero and stay there.
  double zero_clamp = 1e-15;
};

struct AscentResult {
  Weighting weighting;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  double kkt_max_residual = 0.0;
};

/// Called with (iteration, value) after each update, iteration 0 being the start.
using AscentObserver = std::function<void(int, double)>;

/// Multiplicative growth transform w(x) <- w(x) * w(N(x)) / (r * w(G)).
/// Stops when every positive-weight vertex satisfies |w(N(x)) - r w(G)| <= tol
/// or after max_iters updates. Throws NumericalFault on non-finite values.
AscentResult ascend(const RGraph& g, const Weighting& start, const SolverConfig& config,
                    const AscentObserver& observer = {});

struct LagrangianCertificate {
  double value = 0.0;
  /// Maximizing weighting in the graph's own labels.
  Weighting witness;
  /// order[i] is the vertex holding the (i+1)-th largest weight, ties by label.
  std::vector<Vertex> order;
  double kkt_max_residual = 0.0;
  int iterations = 0;
  int starts_used = 0;
  /// 0 is the uniform start; k >= 1 the k-th pseudo-random start.
  int best_start = 0;
  bool converged = false;

  /// The witness relabeled along `order`, hence nonincreasing.
  Weighting decreasing_witness() const;
};

/// Best of the uniform start plus `starts` seeded random starts. The reported
/// value is always attained by the witness, so it is a lower bound on the
/// Lagrangian. Output does not depend on config.threads.
LagrangianCertificate maximize_lagrangian(const RGraph& g, const SolverConfig& config = {});

/// Normalized exponentials drawn from a SplitMix64 stream keyed by (seed, index).
Weighting random_weighting(int t, std::uint64_t seed, std::uint64_t index);

struct PairResidual {
  Vertex x = 0;
  Vertex y = 0;
  double value = 0.0;
};

struct KktResiduals {
  /// |w(N(x)) - r w(G)| for w(x) > 0, zero otherwise; index x-1.
  std::vector<double> vertex;
  /// |w(N(x,y))(w(x) - w(y)) - (w(N_y(x)) - w(N_x(y)))| for x < y, both positive.
  std::vector<PairResidual> pairs;
  double max_vertex = 0.0;
  double max_pair = 0.0;
};

KktResiduals kkt_residuals(const RGraph& g, const Weighting& w);

/// Both x and y receive (w(x) + w(y)) / 2; other weights unchanged.
Weighting twin_merge_weighting(const Weighting& w, Vertex x, Vertex y);

}  // namespace laglab

#endif  // LAGLAB_LAGRANGIAN_HPP
