#include "laglab/motzkin_straus.hpp"

#include <array>
#include <stdexcept>

namespace laglab {

namespace {

struct CliqueSearch {
  std::array<VertexSet, kMaxVertices + 1> adjacency{};
  VertexSet best = 0;

  // Colour classes greedily; the number of classes bounds any clique inside p.
  int colour_bound(VertexSet p) const {
    int colours = 0;
    while (p != 0) {
      ++colours;
      VertexSet available = p;
      while (available != 0) {
        const Vertex v = min_vertex(available);
        p &= ~vertex_bit(v);
        available &= ~(vertex_bit(v) | adjacency[static_cast<std::size_t>(v)]);
      }
    }
    return colours;
  }

  void expand(VertexSet current, VertexSet candidates) {
    if (candidates == 0) {
      if (set_size(current) > set_size(best)) best = current;
      return;
    }
    if (set_size(current) + colour_bound(candidates) <= set_size(best)) return;
    while (candidates != 0) {
      if (set_size(current) + set_size(candidates) <= set_size(best)) return;
      const Vertex v = min_vertex(candidates);
      candidates &= ~vertex_bit(v);
      expand(current | vertex_bit(v), candidates & adjacency[static_cast<std::size_t>(v)]);
    }
  }
};

void require_graph(const RGraph& g) {
  if (g.r() != 2) throw std::invalid_argument("clique search requires r = 2");
  if (g.t() > kMaxCliqueVertices) throw std::invalid_argument("clique search supports t <= 30");
}

}  // namespace

VertexSet maximum_clique(const RGraph& g) {
  require_graph(g);
  CliqueSearch search;
  for (EdgeMask e : g.edges()) {
    const Vertex a = min_vertex(e);
    const Vertex b = max_vertex(e);
    search.adjacency[static_cast<std::size_t>(a)] |= vertex_bit(b);
    search.adjacency[static_cast<std::size_t>(b)] |= vertex_bit(a);
  }
  const VertexSet all = vertex_bit(g.t() + 1) - 1;
  search.best = vertex_bit(1);
  search.expand(0, all);
  return search.best;
}

int clique_number(const RGraph& g) { return set_size(maximum_clique(g)); }

double motzkin_straus_exact(const RGraph& g) {
  require_graph(g);
  if (g.empty()) return 0.0;
  const double omega = clique_number(g);
  return 0.5 * (1.0 - 1.0 / omega);
}

}  // namespace laglab
