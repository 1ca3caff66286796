#include "laglab/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "laglab/parallel.hpp"

namespace laglab {

namespace {

// Ordered partition of [t] into cells of vertices with equal refined invariant.
// Cells are listed from the highest invariant downwards.
std::vector<std::vector<Vertex>> refined_cells(const RGraph& g) {
  const int t = g.t();
  const auto deg = degree_sequence(g);
  std::vector<std::uint64_t> key(static_cast<std::size_t>(t));
  for (int v = 0; v < t; ++v) key[static_cast<std::size_t>(v)] = static_cast<std::uint64_t>(deg[static_cast<std::size_t>(v)]);

  auto count_classes = [](std::vector<std::uint64_t> k) {
    std::sort(k.begin(), k.end());
    return std::unique(k.begin(), k.end()) - k.begin();
  };

  auto classes = count_classes(key);
  for (int round = 0; round < t; ++round) {
    // Signature: own key, then the sorted multiset of sorted co-member keys per edge.
    std::vector<std::vector<std::uint64_t>> sig(static_cast<std::size_t>(t));
    for (int v = 0; v < t; ++v) sig[static_cast<std::size_t>(v)].push_back(key[static_cast<std::size_t>(v)]);
    std::vector<std::vector<std::vector<std::uint64_t>>> per_edge(static_cast<std::size_t>(t));
    for (EdgeMask e : g.edges()) {
      for (Vertex v : set_vertices(e)) {
        std::vector<std::uint64_t> others;
        for (Vertex u : set_vertices(e)) {
          if (u != v) others.push_back(key[static_cast<std::size_t>(u - 1)]);
        }
        std::sort(others.begin(), others.end());
        per_edge[static_cast<std::size_t>(v - 1)].push_back(std::move(others));
      }
    }
    for (int v = 0; v < t; ++v) {
      auto& lists = per_edge[static_cast<std::size_t>(v)];
      std::sort(lists.begin(), lists.end());
      for (const auto& l : lists) {
        sig[static_cast<std::size_t>(v)].push_back(~std::uint64_t{0});
        sig[static_cast<std::size_t>(v)].insert(sig[static_cast<std::size_t>(v)].end(), l.begin(), l.end());
      }
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::uint64_t> next(static_cast<std::size_t>(t));
    for (int v = 0; v < t; ++v) {
      next[static_cast<std::size_t>(v)] = static_cast<std::uint64_t>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<std::size_t>(v)]) - sorted.begin());
    }
    const auto next_classes = count_classes(next);
    key = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }

  std::vector<Vertex> order(static_cast<std::size_t>(t));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return key[static_cast<std::size_t>(a - 1)] > key[static_cast<std::size_t>(b - 1)];
  });
  std::vector<std::vector<Vertex>> cells;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || key[static_cast<std::size_t>(order[i] - 1)] != key[static_cast<std::size_t>(order[i - 1] - 1)]) {
      cells.emplace_back();
    }
    cells.back().push_back(order[i]);
  }
  return cells;
}

}  // namespace

CanonicalForm canonical_form(const RGraph& g) {
  if (g.t() > kCanonicalMaxVertices) {
    throw std::invalid_argument("canonical_form supports at most 10 vertices");
  }
  auto cells = refined_cells(g);
  for (auto& c : cells) std::sort(c.begin(), c.end());

  std::array<VertexSet, kMaxVertices + 1> image{};
  std::vector<EdgeMask> candidate(g.size());
  std::vector<EdgeMask> best;
  bool have_best = false;

  auto evaluate = [&] {
    Vertex label = 1;
    for (const auto& c : cells) {
      for (Vertex v : c) image[static_cast<std::size_t>(v)] = vertex_bit(label++);
    }
    std::size_t i = 0;
    for (EdgeMask e : g.edges()) {
      EdgeMask out = 0;
      for (EdgeMask s = e; s != 0; s &= s - 1) out |= image[static_cast<std::size_t>(std::countr_zero(s) + 1)];
      candidate[i++] = out;
    }
    std::sort(candidate.begin(), candidate.end());
    if (!have_best || candidate < best) {
      best = candidate;
      have_best = true;
    }
  };

  // Odometer over the product of per-cell permutations.
  while (true) {
    evaluate();
    std::size_t k = 0;
    while (k < cells.size() && !std::next_permutation(cells[k].begin(), cells[k].end())) ++k;
    if (k == cells.size()) break;
  }
  return CanonicalForm{g.r(), g.t(), std::move(best)};
}

RGraph canonical_graph(const RGraph& g) {
  auto form = canonical_form(g);
  return RGraph(form.r, form.t, std::move(form.edges));
}

bool are_isomorphic(const RGraph& a, const RGraph& b) {
  if (a.r() != b.r() || a.size() != b.size()) return false;
  const int t = std::max(a.t(), b.t());
  return canonical_form(a.with_vertex_count(t)) == canonical_form(b.with_vertex_count(t));
}

std::vector<CanonicalForm> grow_isomorphism_classes(int r, std::uint64_t m, int t, int threads,
                                                    const ClassFilter& keep,
                                                    std::vector<std::uint64_t>* level_sizes) {
  if (t > kCanonicalMaxVertices) throw std::invalid_argument("class enumeration supports t <= 10");
  const RGraph all = clique(t, r);
  if (m > all.size()) throw std::invalid_argument("m exceeds C(t, r)");

  std::vector<CanonicalForm> level{canonical_form(RGraph(r, t))};
  if (level_sizes) level_sizes->assign(1, 1);
  for (std::uint64_t k = 0; k < m; ++k) {
    const std::uint64_t remaining = m - k - 1;
    std::vector<std::vector<CanonicalForm>> children(level.size());
    parallel_for(level.size(), threads, [&](std::size_t i) {
      const RGraph parent(r, t, level[i].edges);
      auto& out = children[i];
      std::vector<EdgeMask> edges;
      for (EdgeMask e : all.edges()) {
        if (parent.contains(e)) continue;
        edges.assign(parent.edges().begin(), parent.edges().end());
        edges.push_back(e);
        const RGraph child(r, t, edges);
        if (keep && !keep(child, remaining)) continue;
        out.push_back(canonical_form(child));
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    });
    std::vector<CanonicalForm> next;
    for (auto& c : children) {
      next.insert(next.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
    if (level_sizes) level_sizes->push_back(level.size());
  }
  return level;
}

}  // namespace laglab
