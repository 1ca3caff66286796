#ifndef LAGLAB_CANONICAL_HPP
#define LAGLAB_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "laglab/hypergraph.hpp"

namespace laglab {

/// Exhaustive relabeling search is only attempted up to this many vertices.
inline constexpr int kCanonicalMaxVertices = 10;

/// Isomorphism-invariant representative: the colex-sorted edge masks of the
/// lexicographically smallest relabeling.
struct CanonicalForm {
  int r = 0;
  int t = 0;
  std::vector<EdgeMask> edges;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Relabelings are restricted to those that list vertices by an iteratively
/// refined degree invariant (highest class first); the minimum is taken over
/// every permutation inside each class. Throws std::invalid_argument when
/// t > kCanonicalMaxVertices.
CanonicalForm canonical_form(const RGraph& g);
RGraph canonical_graph(const RGraph& g);

/// Graphs on different vertex counts are compared on the larger ground set.
bool are_isomorphic(const RGraph& a, const RGraph& b);

/// Decides whether a partial family (with `remaining` edges still to add) is
/// worth extending. Must be isomorphism invariant.
using ClassFilter = std::function<bool(const RGraph&, std::uint64_t remaining)>;

/// One representative per isomorphism class of m-edge families inside [t]^(r),
/// grown one edge at a time with canonical deduplication at every level. Each
/// level is split over `threads` workers and merged in canonical order, so the
/// output is independent of the thread count. `level_sizes`, when given,
/// receives the number of classes kept at each level 0..m.
std::vector<CanonicalForm> grow_isomorphism_classes(int r, std::uint64_t m, int t, int threads,
                                                    const ClassFilter& keep = {},
                                                    std::vector<std::uint64_t>* level_sizes = nullptr);

}  // namespace laglab

#endif  // LAGLAB_CANONICAL_HPP
