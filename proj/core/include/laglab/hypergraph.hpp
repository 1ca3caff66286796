#ifndef LAGLAB_HYPERGRAPH_HPP
#define LAGLAB_HYPERGRAPH_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace laglab {

/// Vertices are 1-based, matching the ground set [t] = {1, ..., t}.
using Vertex = int;

/// A vertex subset of [64] packed into a word; vertex v occupies bit v-1.
/// Numeric order of masks coincides with colex order of the subsets.
using VertexSet = std::uint64_t;
using EdgeMask = VertexSet;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet vertex_bit(Vertex v) { return VertexSet{1} << (v - 1); }
constexpr bool has_vertex(VertexSet s, Vertex v) { return (s >> (v - 1)) & 1U; }
constexpr int set_size(VertexSet s) { return std::popcount(s); }
/// Largest vertex in s, or 0 when s is empty.
constexpr Vertex max_vertex(VertexSet s) { return s == 0 ? 0 : 64 - std::countl_zero(s); }
constexpr Vertex min_vertex(VertexSet s) { return s == 0 ? 0 : std::countr_zero(s) + 1; }

VertexSet make_set(std::span<const Vertex> vertices);
VertexSet make_set(std::initializer_list<Vertex> vertices);
std::vector<Vertex> set_vertices(VertexSet s);
std::string set_to_string(VertexSet s);

/// C(n, k) for 0 <= n <= 64; zero outside 0 <= k <= n.
std::uint64_t binomial(int n, int k);

/// Colex comparison, the literal sum-of-powers-of-two rule. Test oracle for t <= 60.
bool colex_less_by_power_sum(VertexSet a, VertexSet b);
/// Lex comparison: the minimum of the symmetric difference lies in a.
bool lex_less(VertexSet a, VertexSet b);

/// An r-uniform hypergraph on [t]. Edges are kept sorted in colex order and
/// are immutable after construction.
class RGraph {
 public:
  RGraph(int r, int t);
  /// Validates uniformity, range and distinctness; throws std::invalid_argument.
  RGraph(int r, int t, std::vector<EdgeMask> edges);

  static RGraph from_tuples(int r, int t, const std::vector<std::vector<Vertex>>& tuples);

  int r() const { return r_; }
  int t() const { return t_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  std::span<const EdgeMask> edges() const { return edges_; }

  bool contains(EdgeMask e) const;
  std::vector<std::vector<Vertex>> tuples() const;

  /// Same edges, ambient vertex count changed. Throws if an edge leaves [t].
  RGraph with_vertex_count(int t) const;

  friend bool operator==(const RGraph&, const RGraph&) = default;

 private:
  int r_;
  int t_;
  std::vector<EdgeMask> edges_;
};

/// Bijection between [t]^(r) and {0, ..., C(t,r)-1} via the combinatorial
/// number system. Rank order is colex order.
class EdgeRankTable {
 public:
  EdgeRankTable(int r, int t);

  int r() const { return r_; }
  int t() const { return t_; }
  std::uint64_t size() const { return size_; }

  std::uint64_t rank(EdgeMask e) const;
  EdgeMask unrank(std::uint64_t rank) const;

 private:
  int r_;
  int t_;
  std::uint64_t size_;
};

std::uint64_t colex_rank(EdgeMask e);
EdgeMask colex_unrank(std::uint64_t rank, int r);

/// The first m r-sets of N in colex order. t is the largest vertex used
/// (t = r when m <= 1).
RGraph colex_segment(std::uint64_t m, int r);
/// The first m r-subsets of [t] in lex order.
RGraph lex_segment(std::uint64_t m, int t, int r);
RGraph clique(int t, int r);
RGraph complement(const RGraph& g);

EdgeMask compress_edge(EdgeMask f, Vertex x, Vertex y);
RGraph compress_family(const RGraph& g, Vertex x, Vertex y);
bool is_left_compressed(const RGraph& g);
/// Sweeps pairs with increasing y, then increasing x, until a clean pass.
RGraph left_compress_fixpoint(const RGraph& g);

/// N_G(S) = { e \ S : e in G, S subset of e }. Requires |S| < r.
std::vector<VertexSet> link(const RGraph& g, VertexSet s);
/// N_y(x): members of N(x) avoiding y.
std::vector<VertexSet> link_avoiding(const RGraph& g, Vertex x, Vertex y);

int degree(const RGraph& g, Vertex x);
/// Number of non-edges (within [t]^(r)) containing x.
std::uint64_t nonedge_degree(const RGraph& g, Vertex x);
/// Entry i is the degree of vertex i+1.
std::vector<int> degree_sequence(const RGraph& g);

bool are_twins(const RGraph& g, Vertex x, Vertex y);

/// Relabel vertex v as sigma[v-1]; sigma must be a permutation of [t].
RGraph permute(const RGraph& g, std::span<const Vertex> sigma);

/// Domination order on sorted r-tuples: a_i <= b_i for every i.
bool dominated_by(EdgeMask a, EdgeMask b);

}  // namespace laglab

#endif  // LAGLAB_HYPERGRAPH_HPP
