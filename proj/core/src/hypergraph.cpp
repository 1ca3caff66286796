#include "laglab/hypergraph.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace laglab {

namespace {

using BinomialTable = std::array<std::array<std::uint64_t, 65>, 65>;

BinomialTable make_binomial_table() {
  BinomialTable c{};
  for (int n = 0; n <= 64; ++n) {
    c[n][0] = 1;
    for (int k = 1; k <= n; ++k) {
      // C(64, k) overflows nowhere: max is C(64, 32) < 2^61.
      c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
  return c;
}

const BinomialTable& binomials() {
  static const BinomialTable table = make_binomial_table();
  return table;
}

void check_shape(int r, int t) {
  if (r < 2) throw std::invalid_argument("uniformity r must be at least 2");
  if (t < r) throw std::invalid_argument("vertex count t must be at least r");
  if (t > kMaxVertices) throw std::invalid_argument("vertex count t must be at most 64");
}

void check_vertex(const RGraph& g, Vertex x) {
  if (x < 1 || x > g.t()) throw std::invalid_argument("vertex out of range");
}

}  // namespace

VertexSet make_set(std::span<const Vertex> vertices) {
  VertexSet s = 0;
  for (Vertex v : vertices) {
    if (v < 1 || v > kMaxVertices) throw std::invalid_argument("vertex out of range 1..64");
    s |= vertex_bit(v);
  }
  return s;
}

VertexSet make_set(std::initializer_list<Vertex> vertices) {
  return make_set(std::span<const Vertex>(vertices.begin(), vertices.size()));
}

std::vector<Vertex> set_vertices(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  while (s != 0) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

std::string set_to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : set_vertices(s)) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > 64) throw std::invalid_argument("binomial: n out of range 0..64");
  if (k < 0 || k > n) return 0;
  return binomials()[n][k];
}

bool colex_less_by_power_sum(VertexSet a, VertexSet b) {
  std::uint64_t sa = 0;
  std::uint64_t sb = 0;
  for (Vertex v : set_vertices(a)) sa += std::uint64_t{1} << v;
  for (Vertex v : set_vertices(b)) sb += std::uint64_t{1} << v;
  return sa < sb;
}

bool lex_less(VertexSet a, VertexSet b) {
  const VertexSet diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

RGraph::RGraph(int r, int t) : r_(r), t_(t) { check_shape(r, t); }

RGraph::RGraph(int r, int t, std::vector<EdgeMask> edges) : r_(r), t_(t), edges_(std::move(edges)) {
  check_shape(r, t);
  const VertexSet ground = t == 64 ? ~VertexSet{0} : (vertex_bit(t + 1) - 1);
  for (EdgeMask e : edges_) {
    if (set_size(e) != r) throw std::invalid_argument("edge " + set_to_string(e) + " does not have r vertices");
    if ((e & ~ground) != 0) throw std::invalid_argument("edge " + set_to_string(e) + " leaves [t]");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge");
  }
}

RGraph RGraph::from_tuples(int r, int t, const std::vector<std::vector<Vertex>>& tuples) {
  std::vector<EdgeMask> edges;
  edges.reserve(tuples.size());
  for (const auto& tuple : tuples) {
    if (static_cast<int>(tuple.size()) != r) throw std::invalid_argument("tuple does not have r entries");
    if (!std::is_sorted(tuple.begin(), tuple.end()) ||
        std::adjacent_find(tuple.begin(), tuple.end()) != tuple.end()) {
      throw std::invalid_argument("tuple is not strictly increasing");
    }
    edges.push_back(make_set(tuple));
  }
  return RGraph(r, t, std::move(edges));
}

bool RGraph::contains(EdgeMask e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

std::vector<std::vector<Vertex>> RGraph::tuples() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(edges_.size());
  for (EdgeMask e : edges_) out.push_back(set_vertices(e));
  return out;
}

RGraph RGraph::with_vertex_count(int t) const { return RGraph(r_, t, edges_); }

EdgeRankTable::EdgeRankTable(int r, int t) : r_(r), t_(t), size_(binomial(t, r)) { check_shape(r, t); }

std::uint64_t EdgeRankTable::rank(EdgeMask e) const {
  if (set_size(e) != r_ || max_vertex(e) > t_) throw std::invalid_argument("edge not in [t]^(r)");
  return colex_rank(e);
}

EdgeMask EdgeRankTable::unrank(std::uint64_t rank) const {
  if (rank >= size_) throw std::out_of_range("rank out of range");
  return colex_unrank(rank, r_);
}

std::uint64_t colex_rank(EdgeMask e) {
  std::uint64_t rank = 0;
  int i = 1;
  while (e != 0) {
    const int v = std::countr_zero(e) + 1;
    rank += binomial(v - 1, i);
    ++i;
    e &= e - 1;
  }
  return rank;
}

EdgeMask colex_unrank(std::uint64_t rank, int r) {
  if (r < 1 || r > 64) throw std::invalid_argument("colex_unrank: r out of range");
  if (rank >= binomial(64, r)) throw std::out_of_range("colex_unrank: rank exceeds [64]^(r)");
  EdgeMask e = 0;
  for (int i = r; i >= 1; --i) {
    // Largest c with C(c, i) <= rank; the previous pick bounds c from above.
    int c = i - 1;
    while (c + 1 <= 63 && binomial(c + 1, i) <= rank) ++c;
    e |= vertex_bit(c + 1);
    rank -= binomial(c, i);
  }
  return e;
}

RGraph colex_segment(std::uint64_t m, int r) {
  if (r < 2) throw std::invalid_argument("uniformity r must be at least 2");
  if (m > binomial(64, r)) throw std::invalid_argument("colex_segment: m exceeds [64]^(r)");
  std::vector<EdgeMask> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) edges.push_back(colex_unrank(i, r));
  const int t = edges.empty() ? r : std::max(r, max_vertex(edges.back()));
  return RGraph(r, t, std::move(edges));
}

RGraph lex_segment(std::uint64_t m, int t, int r) {
  check_shape(r, t);
  if (m > binomial(t, r)) throw std::invalid_argument("lex_segment: m exceeds C(t, r)");
  std::vector<EdgeMask> edges;
  edges.reserve(m);
  std::vector<Vertex> tuple(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) tuple[static_cast<std::size_t>(i)] = i + 1;
  while (edges.size() < m) {
    edges.push_back(make_set(tuple));
    int i = r - 1;
    while (i >= 0 && tuple[static_cast<std::size_t>(i)] == t - (r - 1 - i)) --i;
    if (i < 0) break;
    ++tuple[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) {
      tuple[static_cast<std::size_t>(j)] = tuple[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return RGraph(r, t, std::move(edges));
}

RGraph clique(int t, int r) {
  check_shape(r, t);
  const std::uint64_t n = binomial(t, r);
  std::vector<EdgeMask> edges;
  edges.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) edges.push_back(colex_unrank(i, r));
  return RGraph(r, t, std::move(edges));
}

RGraph complement(const RGraph& g) {
  const std::uint64_t n = binomial(g.t(), g.r());
  std::vector<EdgeMask> out;
  out.reserve(n - g.size());
  auto it = g.edges().begin();
  for (std::uint64_t i = 0; i < n; ++i) {
    const EdgeMask e = colex_unrank(i, g.r());
    if (it != g.edges().end() && *it == e) {
      ++it;
    } else {
      out.push_back(e);
    }
  }
  return RGraph(g.r(), g.t(), std::move(out));
}

EdgeMask compress_edge(EdgeMask f, Vertex x, Vertex y) {
  if (!(x < y)) throw std::invalid_argument("compression requires x < y");
  if (!has_vertex(f, x) && has_vertex(f, y)) return (f & ~vertex_bit(y)) | vertex_bit(x);
  return f;
}

RGraph compress_family(const RGraph& g, Vertex x, Vertex y) {
  check_vertex(g, x);
  check_vertex(g, y);
  std::vector<EdgeMask> out;
  out.reserve(g.size());
  for (EdgeMask e : g.edges()) {
    const EdgeMask c = compress_edge(e, x, y);
    out.push_back(c != e && !g.contains(c) ? c : e);
  }
  return RGraph(g.r(), g.t(), std::move(out));
}

bool is_left_compressed(const RGraph& g) {
  for (EdgeMask e : g.edges()) {
    for (Vertex y : set_vertices(e)) {
      for (Vertex x = 1; x < y; ++x) {
        if (has_vertex(e, x)) continue;
        if (!g.contains((e & ~vertex_bit(y)) | vertex_bit(x))) return false;
      }
    }
  }
  return true;
}

RGraph left_compress_fixpoint(const RGraph& g) {
  RGraph current = g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex y = 2; y <= current.t(); ++y) {
      for (Vertex x = 1; x < y; ++x) {
        RGraph next = compress_family(current, x, y);
        if (!(next == current)) {
          current = std::move(next);
          changed = true;
        }
      }
    }
  }
  return current;
}

std::vector<VertexSet> link(const RGraph& g, VertexSet s) {
  if (set_size(s) >= g.r()) throw std::invalid_argument("link requires |S| < r");
  std::vector<VertexSet> out;
  for (EdgeMask e : g.edges()) {
    if ((e & s) == s) out.push_back(e & ~s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> link_avoiding(const RGraph& g, Vertex x, Vertex y) {
  check_vertex(g, x);
  check_vertex(g, y);
  std::vector<VertexSet> out;
  for (VertexSet f : link(g, vertex_bit(x))) {
    if (!has_vertex(f, y)) out.push_back(f);
  }
  return out;
}

int degree(const RGraph& g, Vertex x) {
  check_vertex(g, x);
  int d = 0;
  for (EdgeMask e : g.edges()) d += has_vertex(e, x) ? 1 : 0;
  return d;
}

std::uint64_t nonedge_degree(const RGraph& g, Vertex x) {
  return binomial(g.t() - 1, g.r() - 1) - static_cast<std::uint64_t>(degree(g, x));
}

std::vector<int> degree_sequence(const RGraph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.t()), 0);
  for (EdgeMask e : g.edges()) {
    for (EdgeMask s = e; s != 0; s &= s - 1) ++d[static_cast<std::size_t>(std::countr_zero(s))];
  }
  return d;
}

bool are_twins(const RGraph& g, Vertex x, Vertex y) {
  if (x == y) throw std::invalid_argument("twins require distinct vertices");
  return link_avoiding(g, x, y) == link_avoiding(g, y, x);
}

RGraph permute(const RGraph& g, std::span<const Vertex> sigma) {
  if (static_cast<int>(sigma.size()) != g.t()) throw std::invalid_argument("permutation has wrong length");
  VertexSet seen = 0;
  for (Vertex v : sigma) {
    if (v < 1 || v > g.t() || has_vertex(seen, v)) throw std::invalid_argument("not a permutation of [t]");
    seen |= vertex_bit(v);
  }
  std::vector<EdgeMask> out;
  out.reserve(g.size());
  for (EdgeMask e : g.edges()) {
    EdgeMask image = 0;
    for (EdgeMask s = e; s != 0; s &= s - 1) image |= vertex_bit(sigma[static_cast<std::size_t>(std::countr_zero(s))]);
    out.push_back(image);
  }
  return RGraph(g.r(), g.t(), std::move(out));
}

bool dominated_by(EdgeMask a, EdgeMask b) {
  if (set_size(a) != set_size(b)) return false;
  while (a != 0) {
    if (std::countr_zero(a) > std::countr_zero(b)) return false;
    a &= a - 1;
    b &= b - 1;
  }
  return true;
}

}  // namespace laglab
