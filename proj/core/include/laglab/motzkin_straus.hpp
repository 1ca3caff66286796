#ifndef LAGLAB_MOTZKIN_STRAUS_HPP
#define LAGLAB_MOTZKIN_STRAUS_HPP

#include "laglab/hypergraph.hpp"

namespace laglab {

inline constexpr int kMaxCliqueVertices = 30;

/// Largest clique of a graph (r = 2, t <= 30), by bitset branch and bound
/// with a greedy-colouring bound. Returns the vertex set.
VertexSet maximum_clique(const RGraph& g);
int clique_number(const RGraph& g);

/// Lagrangian of a graph in closed form: (1 - 1/omega) / 2, and 0 without edges.
double motzkin_straus_exact(const RGraph& g);

}  // namespace laglab

#endif  // LAGLAB_MOTZKIN_STRAUS_HPP
