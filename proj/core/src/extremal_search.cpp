#include "laglab/extremal_search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "laglab/canonical.hpp"
#include "laglab/parallel.hpp"

namespace laglab {

namespace {

class DownSetWalker {
 public:
  DownSetWalker(int r, std::uint64_t m, int t, const std::function<void(const RGraph&)>& visit)
      : r_(r), m_(m), t_(t), visit_(visit) {
    const std::uint64_t n = binomial(t, r);
    elements_.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) elements_.push_back(colex_unrank(i, r));
    covers_.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      const EdgeMask e = elements_[i];
      for (Vertex v : set_vertices(e)) {
        if (v == 1 || has_vertex(e, v - 1)) continue;
        covers_[i].push_back(colex_rank((e & ~vertex_bit(v)) | vertex_bit(v - 1)));
      }
    }
    included_.assign(n, 0);
  }

  void run() { walk(0, 0); }

 private:
  void walk(std::size_t i, std::uint64_t count) {
    if (count == m_) {
      std::vector<EdgeMask> edges;
      edges.reserve(m_);
      for (std::size_t j = 0; j < i; ++j) {
        if (included_[j]) edges.push_back(elements_[j]);
      }
      visit_(RGraph(r_, t_, std::move(edges)));
      return;
    }
    if (i == elements_.size() || count + (elements_.size() - i) < m_) return;

    const bool allowed =
        std::all_of(covers_[i].begin(), covers_[i].end(), [&](std::uint64_t j) { return included_[j] != 0; });
    if (allowed) {
      included_[i] = 1;
      walk(i + 1, count + 1);
      included_[i] = 0;
    }
    walk(i + 1, count);
  }

  int r_;
  std::uint64_t m_;
  int t_;
  const std::function<void(const RGraph&)>& visit_;
  std::vector<EdgeMask> elements_;
  std::vector<std::vector<std::uint64_t>> covers_;
  std::vector<char> included_;
};

double log_binomial(double n, double k) {
  return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

}  // namespace

void for_each_left_compressed(int r, std::uint64_t m, int t, const std::function<void(const RGraph&)>& visit) {
  if (r < 2 || t < r || t > kMaxVertices) throw std::invalid_argument("requires 2 <= r <= t <= 64");
  if (m > binomial(t, r)) throw std::invalid_argument("m exceeds C(t, r)");
  DownSetWalker(r, m, t, visit).run();
}

std::vector<RGraph> enumerate_left_compressed(int r, std::uint64_t m, int t) {
  std::vector<RGraph> out;
  for_each_left_compressed(r, m, t, [&](const RGraph& g) { out.push_back(g); });
  return out;
}

std::vector<RGraph> enumerate_all_up_to_iso(int r, std::uint64_t m, int t, double cap, int threads) {
  if (r < 2 || t < r) throw std::invalid_argument("requires 2 <= r <= t");
  const std::uint64_t total = binomial(std::min(t, kMaxVertices), r);
  if (m > total) throw std::invalid_argument("m exceeds C(t, r)");
  if (log_binomial(static_cast<double>(total), static_cast<double>(m)) > std::log(cap) + 1e-9) {
    throw std::invalid_argument("enumerate_all_up_to_iso: search space exceeds the configured cap");
  }
  std::vector<RGraph> out;
  for (auto& form : grow_isomorphism_classes(r, m, t, threads)) out.emplace_back(r, t, std::move(form.edges));
  return out;
}

std::string_view to_string(SearchMode mode) {
  return mode == SearchMode::left_compressed ? "left_compressed" : "all_up_to_iso";
}

SearchReport ff_verify(int r, std::uint64_t m, int t, const SearchConfig& config) {
  if (r < 2 || t < r) throw std::invalid_argument("ff_verify requires 2 <= r <= t");
  if (m > binomial(t, r)) throw std::invalid_argument("ff_verify requires m <= C(t, r)");
  const int threads = resolve_threads(config.threads);

  SearchReport report;
  report.r = r;
  report.m = m;
  report.t = t;
  report.mode = config.mode;

  std::vector<RGraph> stream = config.mode == SearchMode::left_compressed
                                   ? enumerate_left_compressed(r, m, t)
                                   : enumerate_all_up_to_iso(r, m, t, config.cap, threads);

  SolverConfig screening = config.solver;
  screening.starts = std::min(config.screening_starts, config.solver.starts);
  screening.threads = 1;
  SolverConfig full = config.solver;
  full.threads = 1;

  report.candidates.resize(stream.size());
  parallel_for(stream.size(), threads, [&](std::size_t i) {
    auto& c = report.candidates[i];
    c.rank = i;
    c.graph = stream[i];
    c.certificate = maximize_lagrangian(stream[i], screening);
  });

  double leader = 0.0;
  for (const auto& c : report.candidates) leader = std::max(leader, c.certificate.value);
  std::vector<std::size_t> reruns;
  for (std::size_t i = 0; i < report.candidates.size(); ++i) {
    if (report.candidates[i].certificate.value >= leader - config.rerun_window) reruns.push_back(i);
  }
  parallel_for(reruns.size(), threads, [&](std::size_t k) {
    auto& c = report.candidates[reruns[k]];
    auto cert = maximize_lagrangian(c.graph, full);
    // The full run includes the screening starts, so it never reports less.
    c.certificate = std::move(cert);
    c.rerun = true;
  });

  report.colex = colex_segment(m, r).with_vertex_count(t);
  report.colex_certificate = maximize_lagrangian(report.colex, full);
  report.colex_value = report.colex_certificate.value;

  std::size_t best = 0;
  for (std::size_t i = 0; i < report.candidates.size(); ++i) {
    if (report.candidates[i].certificate.value > report.candidates[best].certificate.value) best = i;
    if (!report.candidates[i].certificate.converged) report.nonconverged.push_back(i);
  }
  if (!report.candidates.empty()) {
    report.best_value = report.candidates[best].certificate.value;
    report.best_certificate = report.candidates[best].certificate;
  }
  for (const auto& c : report.candidates) {
    if (c.certificate.value >= report.best_value - config.tol) report.best_families.push_back(c.graph);
  }
  report.margin = report.colex_value - report.best_value;
  report.colex_is_max = report.best_value <= report.colex_value + config.tol;
  return report;
}

bool structure_check_nonedges(const RGraph& g, int i) {
  if (i < 0 || i > g.t()) throw std::invalid_argument("structure_check_nonedges requires 0 <= i <= t");
  VertexSet tail = 0;
  for (Vertex v = g.t() - i + 1; v <= g.t(); ++v) tail |= vertex_bit(v);
  const RGraph comp = complement(g);
  for (EdgeMask e : comp.edges()) {
    if ((e & tail) != tail) return false;
  }
  return true;
}

P2LinkVerdict p2_link_check(const RGraph& best, const BoundedSearchConfig& config) {
  const RGraph comp = complement(best);
  P2LinkVerdict v;
  v.a = comp.size();
  v.complement_p2 = p2(comp);
  v.bounded_max = p2_max_bounded(best.r(), v.a, best.t(), config).value;
  v.ratio = v.bounded_max == 0 ? 1.0 : static_cast<double>(v.complement_p2) / static_cast<double>(v.bounded_max);
  v.equality_required = v.a <= 3;
  v.holds = !v.equality_required || v.complement_p2 == v.bounded_max;
  return v;
}

}  // namespace laglab
