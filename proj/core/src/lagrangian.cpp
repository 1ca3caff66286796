#include "laglab/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "laglab/parallel.hpp"

namespace laglab {

namespace {

// Above this many r-subsets the complement representation is never built.
constexpr std::uint64_t kComplementLimit = 5'000'000;
constexpr double kZeroMix = 1e-3;
constexpr int kPolishStart = 1000;
constexpr int kPolishIters = 20000;

void require_dimension(const RGraph& g, const Weighting& w) {
  if (w.size() != g.t()) {
    throw std::invalid_argument("weighting has " + std::to_string(w.size()) + " entries, graph has t = " +
                                std::to_string(g.t()));
  }
}

double product_avoiding(EdgeMask e, EdgeMask skip, std::span<const double> w) {
  double p = 1.0;
  for (EdgeMask s = e & ~skip; s != 0; s &= s - 1) p *= w[static_cast<std::size_t>(std::countr_zero(s))];
  return p;
}

// w(G) together with its gradient. Dense graphs are evaluated as the clique
// polynomial e_r(w) minus the (smaller) set of non-edges.
class EdgePolynomial {
 public:
  explicit EdgePolynomial(const RGraph& g) : r_(g.r()), t_(g.t()) {
    const std::uint64_t total = binomial(t_, r_);
    via_complement_ = total <= kComplementLimit && total - g.size() < g.size();
    const RGraph& source = g;
    std::vector<EdgeMask> masks;
    if (via_complement_) {
      const RGraph comp = complement(g);
      masks.assign(comp.edges().begin(), comp.edges().end());
    } else {
      masks.assign(source.edges().begin(), source.edges().end());
    }
    vertices_.reserve(masks.size() * static_cast<std::size_t>(r_));
    for (EdgeMask e : masks) {
      for (EdgeMask s = e; s != 0; s &= s - 1) vertices_.push_back(std::countr_zero(s));
    }
  }

  double evaluate(std::span<const double> w, std::span<double> grad) const {
    const auto r = static_cast<std::size_t>(r_);
    double p = 0.0;
    std::fill(grad.begin(), grad.end(), 0.0);
    prefix_.resize(r + 1);
    for (std::size_t base = 0; base < vertices_.size(); base += r) {
      prefix_[0] = 1.0;
      for (std::size_t k = 0; k < r; ++k) prefix_[k + 1] = prefix_[k] * w[static_cast<std::size_t>(vertices_[base + k])];
      p += prefix_[r];
      double suffix = 1.0;
      for (std::size_t k = r; k-- > 0;) {
        grad[static_cast<std::size_t>(vertices_[base + k])] += prefix_[k] * suffix;
        suffix *= w[static_cast<std::size_t>(vertices_[base + k])];
      }
    }
    if (!via_complement_) return p;

    // e_k(w) for k <= r, then e_{r-1}(w without x) by peeling x off.
    elementary_.assign(r + 1, 0.0);
    elementary_[0] = 1.0;
    for (double x : w) {
      for (std::size_t k = r; k >= 1; --k) elementary_[k] += elementary_[k - 1] * x;
    }
    for (std::size_t x = 0; x < w.size(); ++x) {
      double q = 1.0;
      for (std::size_t k = 1; k < r; ++k) q = elementary_[k] - w[x] * q;
      grad[x] = std::max(0.0, q - grad[x]);
    }
    return std::max(0.0, elementary_[r] - p);
  }

 private:
  int r_;
  int t_;
  bool via_complement_ = false;
  std::vector<int> vertices_;
  mutable std::vector<double> prefix_;
  mutable std::vector<double> elementary_;
};

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<Vertex> decreasing_order(const Weighting& w) {
  std::vector<Vertex> order(static_cast<std::size_t>(w.size()));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return w[a] > w[b]; });
  return order;
}

}  // namespace

Weighting::Weighting(std::vector<double> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw std::invalid_argument("weighting must have at least one entry");
  double sum = 0.0;
  for (double x : w_) {
    if (!std::isfinite(x) || x < 0.0) throw std::invalid_argument("weights must be finite and nonnegative");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) throw std::invalid_argument("weights must sum to 1");
}

Weighting Weighting::uniform(int t) {
  if (t < 1) throw std::invalid_argument("uniform weighting needs t >= 1");
  return Weighting(std::vector<double>(static_cast<std::size_t>(t), 1.0 / t));
}

Weighting Weighting::uniform_on(int t, VertexSet support) {
  const int k = set_size(support);
  if (k == 0 || max_vertex(support) > t) throw std::invalid_argument("support must be a nonempty subset of [t]");
  std::vector<double> w(static_cast<std::size_t>(t), 0.0);
  for (Vertex v : set_vertices(support)) w[static_cast<std::size_t>(v - 1)] = 1.0 / k;
  return Weighting(std::move(w));
}

bool Weighting::is_decreasing() const { return std::is_sorted(w_.begin(), w_.end(), std::greater<>()); }

VertexSet Weighting::support() const {
  VertexSet s = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i] > 0.0) s |= vertex_bit(static_cast<Vertex>(i + 1));
  }
  return s;
}

double weight_of(const RGraph& g, const Weighting& w) {
  require_dimension(g, w);
  double total = 0.0;
  for (EdgeMask e : g.edges()) total += product_avoiding(e, 0, w.values());
  return total;
}

double link_weight(const RGraph& g, const Weighting& w, VertexSet s) {
  require_dimension(g, w);
  if (set_size(s) >= g.r()) throw std::invalid_argument("link requires |S| < r");
  double total = 0.0;
  for (EdgeMask e : g.edges()) {
    if ((e & s) == s) total += product_avoiding(e, s, w.values());
  }
  return total;
}

double link_weight_avoiding(const RGraph& g, const Weighting& w, Vertex x, Vertex y) {
  require_dimension(g, w);
  double total = 0.0;
  for (EdgeMask e : g.edges()) {
    if (has_vertex(e, x) && !has_vertex(e, y)) total += product_avoiding(e, vertex_bit(x), w.values());
  }
  return total;
}

std::vector<double> gradient(const RGraph& g, const Weighting& w) {
  require_dimension(g, w);
  std::vector<double> grad(static_cast<std::size_t>(g.t()), 0.0);
  for (EdgeMask e : g.edges()) {
    for (EdgeMask s = e; s != 0; s &= s - 1) {
      const int x = std::countr_zero(s);
      grad[static_cast<std::size_t>(x)] += product_avoiding(e, VertexSet{1} << x, w.values());
    }
  }
  return grad;
}

AscentResult ascend(const RGraph& g, const Weighting& start, const SolverConfig& config,
                    const AscentObserver& observer) {
  require_dimension(g, start);
  if (g.empty()) {
    if (observer) observer(0, 0.0);
    return AscentResult{start, 0.0, 0, true, 0.0};
  }

  const EdgePolynomial poly(g);
  const double r = g.r();
  const auto t = static_cast<std::size_t>(g.t());
  std::vector<double> w(start.values().begin(), start.values().end());
  std::vector<double> grad(t);

  auto renormalize = [&] {
    const double sum = std::accumulate(w.begin(), w.end(), 0.0);
    if (!std::isfinite(sum) || sum <= 0.0) throw NumericalFault("weights collapsed during ascent");
    for (double& x : w) x /= sum;
  };

  double p = poly.evaluate(w, grad);
  if (p <= 0.0) {
    if (observer) observer(0, p);
    for (double& x : w) x = (1.0 - kZeroMix) * x + kZeroMix / static_cast<double>(t);
    renormalize();
    p = poly.evaluate(w, grad);
  }

  AscentResult result;
  int next_polish = kPolishStart;
  for (int iter = 0;; ++iter) {
    if (!std::isfinite(p)) throw NumericalFault("non-finite polynomial value");
    double residual = 0.0;
    // Pair residuals equal |grad[x] - grad[y]| on the support, so the spread
    // has to meet the tolerance as well.
    double grad_lo = std::numeric_limits<double>::infinity();
    double grad_hi = -grad_lo;
    for (std::size_t x = 0; x < t; ++x) {
      if (!std::isfinite(grad[x])) throw NumericalFault("non-finite gradient");
      if (w[x] > 0.0) {
        residual = std::max(residual, std::abs(grad[x] - r * p));
        grad_lo = std::min(grad_lo, grad[x]);
        grad_hi = std::max(grad_hi, grad[x]);
      }
    }
    if (observer) observer(iter, p);
    result.iterations = iter;
    result.kkt_max_residual = residual;
    result.value = p;
    if (residual <= config.tol && grad_hi - grad_lo <= config.tol) {
      result.converged = true;
      break;
    }
    if (iter >= config.max_iters || p <= 0.0) break;

    // Slow progress usually means the maximum sits on a face and some weights
    // are decaying sublinearly. Retry on that face and keep it if it is no worse.
    if (iter == next_polish) {
      next_polish *= 2;
      // Candidate: the lightest vertex whose weight is still shrinking.
      std::size_t drop = t;
      for (std::size_t x = 0; x < t; ++x) {
        if (w[x] > 0.0 && grad[x] < r * p && (drop == t || w[x] < w[drop])) drop = x;
      }
      if (drop != t) {
        std::vector<double> face = w;
        face[drop] = 0.0;
        const double sum = std::accumulate(face.begin(), face.end(), 0.0);
        for (double& x : face) x /= sum;
        SolverConfig sub = config;
        sub.max_iters = std::min(config.max_iters - iter, kPolishIters);
        const AscentResult polished = ascend(g, Weighting(std::move(face)), sub);
        if (polished.converged && polished.value >= p) {
          w.assign(polished.weighting.values().begin(), polished.weighting.values().end());
          p = poly.evaluate(w, grad);
          continue;
        }
      }
    }

    const double scale = 1.0 / (r * p);
    for (std::size_t x = 0; x < t; ++x) {
      w[x] *= grad[x] * scale;
      if (w[x] < config.zero_clamp) w[x] = 0.0;
    }
    renormalize();
    p = poly.evaluate(w, grad);
  }
  result.weighting = Weighting(std::move(w));
  return result;
}

Weighting LagrangianCertificate::decreasing_witness() const {
  std::vector<double> sorted;
  sorted.reserve(order.size());
  for (Vertex v : order) sorted.push_back(witness[v]);
  return Weighting(std::move(sorted));
}

Weighting random_weighting(int t, std::uint64_t seed, std::uint64_t index) {
  std::uint64_t key = index;
  std::uint64_t state = seed ^ splitmix64(key);
  std::vector<double> w(static_cast<std::size_t>(t));
  double sum = 0.0;
  for (double& x : w) {
    const double u = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
    x = -std::log1p(-u);
    sum += x;
  }
  if (sum <= 0.0) return Weighting::uniform(t);
  for (double& x : w) x /= sum;
  return Weighting(std::move(w));
}

LagrangianCertificate maximize_lagrangian(const RGraph& g, const SolverConfig& config) {
  if (config.starts < 0) throw std::invalid_argument("starts must be nonnegative");
  const int t = g.t();
  const auto runs = static_cast<std::size_t>(config.starts) + 1;

  LagrangianCertificate cert;
  cert.starts_used = static_cast<int>(runs);
  if (g.empty()) {
    cert.witness = Weighting::uniform(t);
    cert.order = decreasing_order(cert.witness);
    cert.converged = true;
    return cert;
  }

  std::vector<AscentResult> results(runs);
  parallel_for(runs, config.threads, [&](std::size_t i) {
    const Weighting start = i == 0 ? Weighting::uniform(t) : random_weighting(t, config.seed, i);
    results[i] = ascend(g, start, config);
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < runs; ++i) {
    if (results[i].value > results[best].value) best = i;
  }
  cert.value = results[best].value;
  cert.witness = results[best].weighting;
  cert.order = decreasing_order(cert.witness);
  cert.kkt_max_residual = results[best].kkt_max_residual;
  cert.iterations = results[best].iterations;
  cert.best_start = static_cast<int>(best);
  cert.converged = results[best].converged;
  return cert;
}

KktResiduals kkt_residuals(const RGraph& g, const Weighting& w) {
  require_dimension(g, w);
  const int t = g.t();
  const double r = g.r();
  const double total = weight_of(g, w);
  const auto grad = gradient(g, w);

  KktResiduals out;
  out.vertex.assign(static_cast<std::size_t>(t), 0.0);
  for (Vertex x = 1; x <= t; ++x) {
    if (w[x] <= 0.0) continue;
    const double res = std::abs(grad[static_cast<std::size_t>(x - 1)] - r * total);
    out.vertex[static_cast<std::size_t>(x - 1)] = res;
    out.max_vertex = std::max(out.max_vertex, res);
  }

  for (Vertex x = 1; x <= t; ++x) {
    if (w[x] <= 0.0) continue;
    for (Vertex y = x + 1; y <= t; ++y) {
      if (w[y] <= 0.0) continue;
      // One pass: co-link N(x,y), and the links of x avoiding y and of y avoiding x.
      const VertexSet both = vertex_bit(x) | vertex_bit(y);
      double co = 0.0;
      double x_only = 0.0;
      double y_only = 0.0;
      for (EdgeMask e : g.edges()) {
        const EdgeMask hit = e & both;
        if (hit == both) {
          co += product_avoiding(e, both, w.values());
        } else if (hit == vertex_bit(x)) {
          x_only += product_avoiding(e, hit, w.values());
        } else if (hit == vertex_bit(y)) {
          y_only += product_avoiding(e, hit, w.values());
        }
      }
      const double res = std::abs(co * (w[x] - w[y]) - (x_only - y_only));
      out.pairs.push_back({x, y, res});
      out.max_pair = std::max(out.max_pair, res);
    }
  }
  return out;
}

Weighting twin_merge_weighting(const Weighting& w, Vertex x, Vertex y) {
  if (x == y) throw std::invalid_argument("twin merge requires distinct vertices");
  if (x < 1 || y < 1 || x > w.size() || y > w.size()) throw std::invalid_argument("vertex out of range");
  std::vector<double> out(w.values().begin(), w.values().end());
  const double mean = 0.5 * (w[x] + w[y]);
  out[static_cast<std::size_t>(x - 1)] = mean;
  out[static_cast<std::size_t>(y - 1)] = mean;
  return Weighting(std::move(out));
}

}  // namespace laglab
