#include "report.hpp"

#include <sstream>

namespace laglab::report {

namespace {

Json weights(const Weighting& w) {
  Json out = Json::array();
  for (double x : w.values()) out.push_back(x);
  return out;
}

Json structures(const std::vector<P2Structure>& tags) {
  Json out = Json::array();
  for (P2Structure s : tags) out.push_back(std::string(to_string(s)));
  return out;
}

}  // namespace

Json envelope(std::string_view command) {
  Json j;
  j["schema"] = std::string(kSchema);
  j["command"] = std::string(command);
  return j;
}

Json to_json(const RGraph& g) {
  Json j;
  j["r"] = g.r();
  j["t"] = g.t();
  j["m"] = g.size();
  Json edges = Json::array();
  for (const auto& tuple : g.tuples()) edges.push_back(tuple);
  j["edges"] = std::move(edges);
  return j;
}

Json to_json(const LagrangianCertificate& c) {
  Json j;
  j["value"] = c.value;
  j["witness"] = weights(c.witness);
  j["order"] = c.order;
  j["kkt_max_residual"] = c.kkt_max_residual;
  j["iterations"] = c.iterations;
  j["starts_used"] = c.starts_used;
  j["best_start"] = c.best_start;
  j["converged"] = c.converged;
  return j;
}

Json to_json(const SearchReport& s) {
  Json j;
  j["r"] = s.r;
  j["m"] = s.m;
  j["t"] = s.t;
  j["mode"] = std::string(to_string(s.mode));
  j["best_value"] = s.best_value;
  j["colex_value"] = s.colex_value;
  j["colex_is_max"] = s.colex_is_max;
  j["margin"] = s.margin;
  Json best = Json::array();
  for (const auto& g : s.best_families) best.push_back(to_json(g));
  j["best_families"] = std::move(best);
  j["best_certificate"] = to_json(s.best_certificate);
  j["colex_certificate"] = to_json(s.colex_certificate);
  j["candidate_count"] = s.candidates.size();
  j["nonconverged"] = s.nonconverged;
  Json rows = Json::array();
  for (const auto& c : s.candidates) {
    Json row;
    row["rank"] = c.rank;
    row["edges"] = edges_field(c.graph);
    row["lambda"] = c.certificate.value;
    row["kkt_residual"] = c.certificate.kkt_max_residual;
    row["converged"] = c.certificate.converged;
    row["rerun"] = c.rerun;
    rows.push_back(std::move(row));
  }
  j["candidates"] = std::move(rows);
  return j;
}

Json to_json(const P2Report& p) {
  Json j;
  j["r"] = p.r;
  j["m"] = p.m;
  if (p.t > 0) {
    j["t"] = p.t;
  } else {
    j["t"] = nullptr;
  }
  j["value"] = p.value;
  j["degree_sequence"] = p.degree_sequence;
  j["structures"] = structures(p.structures);
  Json maximizers = Json::array();
  for (const auto& g : p.maximizers) maximizers.push_back(to_json(g));
  j["maximizers"] = std::move(maximizers);
  j["classes_per_level"] = p.classes_per_level;
  return j;
}

Json to_json(const AkReport& a) {
  Json j;
  j["counterexample"] = a.counterexample;
  j["counterexample_degrees"] = a.counterexample_degrees;
  j["family_max"] = a.family_max;
  j["family_max_graph"] = to_json(a.family_max_graph);
  j["claimed_family_bound"] = a.claimed_family_bound;
  Json rows = Json::array();
  for (const auto& r : a.rows) {
    Json row;
    row["t"] = r.t;
    row["lex"] = r.lex;
    row["complement_of_lex"] = r.complement_of_lex;
    if (r.colex >= 0) {
      row["colex"] = r.colex;
    } else {
      row["colex"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json to_json(const NikiforovVerdict& v) {
  Json j;
  j["m"] = v.m;
  j["r"] = v.r;
  j["x"] = v.x;
  j["bound"] = v.bound;
  j["value"] = v.value;
  j["slack"] = v.slack;
  j["holds"] = v.holds;
  j["integer_x"] = v.integer_x;
  j["equality"] = v.equality;
  return j;
}

Json to_json(const ExpansionCheck& c) {
  Json j;
  j["t"] = c.t;
  j["r"] = c.r;
  j["a"] = c.a;
  j["lambda"] = c.lambda;
  j["expansion"] = c.expansion;
  j["error_scale"] = c.error_scale;
  j["ratio"] = c.ratio;
  j["constant"] = c.constant;
  j["holds"] = c.holds;
  j["converged"] = c.converged;
  return j;
}

std::string edges_field(const RGraph& g) {
  std::string out;
  bool first_edge = true;
  for (EdgeMask e : g.edges()) {
    if (!first_edge) out += ';';
    first_edge = false;
    bool first = true;
    for (Vertex v : set_vertices(e)) {
      if (!first) out += ' ';
      first = false;
      out += std::to_string(v);
    }
  }
  return out;
}

std::string search_csv_header(bool with_m) {
  return with_m ? "m,rank,edges,lambda,kkt_residual\n" : "rank,edges,lambda,kkt_residual\n";
}

std::string search_csv_rows(const SearchReport& s, bool with_m) {
  std::ostringstream out;
  for (const auto& c : s.candidates) {
    if (with_m) out << s.m << ',';
    out << c.rank << ',' << edges_field(c.graph) << ',' << Json(c.certificate.value).dump() << ','
        << Json(c.certificate.kkt_max_residual).dump() << '\n';
  }
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace laglab::report
