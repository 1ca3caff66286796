// Slow, independent reference implementations used only by the tests.
#ifndef LAGLAB_TESTS_ORACLES_HPP
#define LAGLAB_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "laglab/hypergraph.hpp"

namespace oracle {

using Tuple = std::vector<int>;

// All r-subsets of [t] as sorted tuples, in generation (lexicographic) order.
inline std::vector<Tuple> subsets(int t, int r) {
  std::vector<Tuple> out;
  Tuple cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= t; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

// Colex key: sum of 2^v over the tuple (valid while t <= 60).
inline std::uint64_t power_sum(const Tuple& a) {
  std::uint64_t s = 0;
  for (int v : a) s += std::uint64_t{1} << v;
  return s;
}

inline std::vector<Tuple> colex_sorted(int t, int r) {
  auto all = subsets(t, r);
  std::sort(all.begin(), all.end(), [](const Tuple& a, const Tuple& b) { return power_sum(a) < power_sum(b); });
  return all;
}

// Lex by the minimum of the symmetric difference.
inline bool symdiff_lex_less(const Tuple& a, const Tuple& b) {
  std::set<int> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  int best = 1 << 30;
  bool in_a = false;
  for (int v : sa) {
    if (!sb.count(v) && v < best) {
      best = v;
      in_a = true;
    }
  }
  for (int v : sb) {
    if (!sa.count(v) && v < best) {
      best = v;
      in_a = false;
    }
  }
  return best != (1 << 30) && in_a;
}

inline laglab::RGraph graph(int r, int t, const std::vector<Tuple>& edges) {
  std::vector<std::vector<laglab::Vertex>> tuples(edges.begin(), edges.end());
  return laglab::RGraph::from_tuples(r, t, tuples);
}

inline std::set<Tuple> tuple_set(const laglab::RGraph& g) {
  auto t = g.tuples();
  return {t.begin(), t.end()};
}

// Every m-subset of the given list, passed as index vectors.
inline void for_each_combination(std::size_t n, std::size_t m, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  if (m > n) return;
  while (true) {
    f(idx);
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == n - m + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Left-compressed straight from the definition: C_xy(F) = F for all x < y.
inline bool left_compressed(const std::set<Tuple>& fam, int t) {
  for (int x = 1; x <= t; ++x) {
    for (int y = x + 1; y <= t; ++y) {
      for (const auto& e : fam) {
        const bool has_x = std::find(e.begin(), e.end(), x) != e.end();
        const bool has_y = std::find(e.begin(), e.end(), y) != e.end();
        if (has_x || !has_y) continue;
        Tuple c = e;
        std::replace(c.begin(), c.end(), y, x);
        std::sort(c.begin(), c.end());
        if (!fam.count(c)) return false;
      }
    }
  }
  return true;
}

inline std::vector<std::set<Tuple>> brute_left_compressed(int r, int m, int t) {
  const auto all = subsets(t, r);
  std::vector<std::set<Tuple>> out;
  for_each_combination(all.size(), static_cast<std::size_t>(m), [&](const std::vector<std::size_t>& idx) {
    std::set<Tuple> fam;
    for (auto i : idx) fam.insert(all[i]);
    if (left_compressed(fam, t)) out.push_back(fam);
  });
  return out;
}

// Minimum sorted mask sequence over all t! relabelings.
inline std::vector<std::uint64_t> brute_canonical(const laglab::RGraph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.t()));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::uint64_t> best;
  bool have = false;
  do {
    std::vector<std::uint64_t> cand;
    for (const auto& e : g.tuples()) {
      std::uint64_t mask = 0;
      for (int v : e) mask |= std::uint64_t{1} << (perm[static_cast<std::size_t>(v - 1)] - 1);
      cand.push_back(mask);
    }
    std::sort(cand.begin(), cand.end());
    if (!have || cand < best) {
      best = cand;
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::int64_t degree_square_sum(const laglab::RGraph& g) {
  std::vector<std::int64_t> d(static_cast<std::size_t>(g.t()) + 1, 0);
  for (const auto& e : g.tuples()) {
    for (int v : e) ++d[static_cast<std::size_t>(v)];
  }
  std::int64_t s = 0;
  for (auto x : d) s += x * x;
  return s;
}

// Maximum of sum d^2 over every m-subset of [t]^(r).
inline std::int64_t brute_p2_max(int r, int m, int t) {
  const auto all = subsets(t, r);
  std::int64_t best = -1;
  for_each_combination(all.size(), static_cast<std::size_t>(m), [&](const std::vector<std::size_t>& idx) {
    std::vector<std::int64_t> d(static_cast<std::size_t>(t) + 1, 0);
    for (auto i : idx) {
      for (int v : all[i]) ++d[static_cast<std::size_t>(v)];
    }
    std::int64_t s = 0;
    for (auto x : d) s += x * x;
    best = std::max(best, s);
  });
  return best;
}

inline laglab::RGraph random_graph(std::mt19937_64& rng, int r, int t, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<Tuple> edges;
  for (const auto& e : subsets(t, r)) {
    if (keep(rng)) edges.push_back(e);
  }
  return graph(r, t, edges);
}

inline std::vector<laglab::Vertex> random_permutation(std::mt19937_64& rng, int t) {
  std::vector<laglab::Vertex> p(static_cast<std::size_t>(t));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::vector<double> random_simplex_point(std::mt19937_64& rng, int t) {
  std::exponential_distribution<double> ex(1.0);
  std::vector<double> w(static_cast<std::size_t>(t));
  double s = 0.0;
  for (double& x : w) s += (x = ex(rng));
  for (double& x : w) x /= s;
  return w;
}

// Edge polynomial evaluated straight from the tuples.
inline double polynomial(const laglab::RGraph& g, const std::vector<double>& w) {
  double s = 0.0;
  for (const auto& e : g.tuples()) {
    double p = 1.0;
    for (int v : e) p *= w[static_cast<std::size_t>(v - 1)];
    s += p;
  }
  return s;
}

}  // namespace oracle

#endif  // LAGLAB_TESTS_ORACLES_HPP
