#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "laglab/edge_list.hpp"
#include "laglab/errors.hpp"
#include "laglab/motzkin_straus.hpp"
#include "laglab/parallel.hpp"

namespace laglab::cli {

namespace {

std::string fmt(double x) { return report::Json(x).dump(); }

void add_run_config(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--tol", cfg.tol, "Verdict tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--starts", cfg.starts, "Random solver starts besides the uniform one")
      ->check(CLI::Range(1, 1 << 20))
      ->capture_default_str();
  cmd->add_option("--max-iters", cfg.max_iters, "Ascent iteration cap per start")
      ->check(CLI::Range(1, 1 << 30))
      ->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "Seed of the random starts")->capture_default_str();
  cmd->add_option("--threads", cfg.threads, "Worker threads (0: LAGLAB_THREADS or hardware)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--output,-o", cfg.output, "Write the report here instead of stdout");
  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};
  cmd->add_option_function<std::string>(
         "--format", [&cfg, formats](const std::string& name) { cfg.format = formats.at(CLI::detail::to_lower(name)); },
         "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}, CLI::ignore_case).description(""))
      ->type_name("{json,csv,text}")
      ->default_str("json");
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes to the configured destination.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + cfg.output);
  file << text;
}

int finish(const Verdict& v, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::string body;
  switch (cfg.format) {
    case Format::json:
      body = report::dump(v.document);
      break;
    case Format::text:
      body = v.text;
      break;
    case Format::csv:
      if (v.csv.empty()) throw UsageError("this command has no CSV output");
      body = v.csv;
      break;
  }
  emit(cfg, out, body);
  if (!v.passed()) {
    err << "verification failed: " << v.failure << "\n";
    return kExitVerificationFailure;
  }
  return kExitPass;
}

void record_failure(Verdict& v, const std::string& what) {
  if (v.failure.empty()) v.failure = what;
}

void close_document(Verdict& v) {
  v.document["passed"] = v.passed();
  if (v.passed()) {
    v.document["failure"] = nullptr;
    v.text += "PASS\n";
  } else {
    v.document["failure"] = v.failure;
    v.text += "FAIL: " + v.failure + "\n";
  }
}

}  // namespace

SolverConfig RunConfig::solver() const {
  SolverConfig s;
  s.starts = starts;
  s.max_iters = max_iters;
  s.seed = seed;
  s.threads = resolve_threads(threads);
  return s;
}

Verdict verify_ff(int r, std::uint64_t m_min, std::uint64_t m_max, int t, const RunConfig& cfg) {
  if (r < 2 || t < r || t > kMaxVertices) throw UsageError("verify ff requires 2 <= r <= t <= 64");
  if (m_min < 1 || m_min > m_max || m_max > binomial(t, r)) {
    throw UsageError("verify ff requires 1 <= m-min <= m-max <= C(t, r)");
  }
  if (r == 2 && t > kMaxCliqueVertices) throw UsageError("verify ff with r = 2 supports t <= 30");
  SearchConfig search;
  search.solver = cfg.solver();
  search.solver.threads = 1;
  search.tol = cfg.tol;
  search.threads = cfg.threads;

  Verdict v;
  v.document = report::envelope("verify ff");
  v.document["r"] = r;
  v.document["t"] = t;
  v.document["m_min"] = m_min;
  v.document["m_max"] = m_max;
  v.document["tol"] = cfg.tol;
  report::Json reports = report::Json::array();
  const bool with_m = m_min != m_max;
  v.csv = report::search_csv_header(with_m);
  std::ostringstream text;
  for (std::uint64_t m = m_min; m <= m_max; ++m) {
    const SearchReport s = ff_verify(r, m, t, search);
    report::Json j = report::to_json(s);
    text << "m=" << m << " candidates=" << s.candidates.size() << " best=" << fmt(s.best_value)
         << " colex=" << fmt(s.colex_value) << " margin=" << fmt(s.margin);
    if (!s.colex_is_max) {
      record_failure(v, "m=" + std::to_string(m) + ": colex value " + fmt(s.colex_value) + " is below the best " +
                            fmt(s.best_value));
    }
    if (r == 2) {
      const double exact_colex = motzkin_straus_exact(s.colex);
      double exact_best = 0.0;
      for (const auto& c : s.candidates) exact_best = std::max(exact_best, motzkin_straus_exact(c.graph));
      j["motzkin_straus_colex"] = exact_colex;
      j["motzkin_straus_best"] = exact_best;
      text << " exact_best=" << fmt(exact_best);
      if (std::abs(s.colex_value - exact_colex) > cfg.tol) {
        record_failure(v, "m=" + std::to_string(m) + ": solver value of colex " + fmt(s.colex_value) +
                              " differs from the clique formula " + fmt(exact_colex));
      }
      if (std::abs(s.best_value - exact_best) > cfg.tol) {
        record_failure(v, "m=" + std::to_string(m) + ": search maximum " + fmt(s.best_value) +
                              " differs from the clique formula " + fmt(exact_best));
      }
    }
    text << "\n";
    v.csv += report::search_csv_rows(s, with_m);
    reports.push_back(std::move(j));
  }
  v.document["reports"] = std::move(reports);
  v.text = text.str();
  close_document(v);
  return v;
}

Verdict verify_ak(int t_min, int t_max) {
  if (t_min < 6 || t_max < t_min || t_max > kMaxVertices) throw UsageError("verify ak requires 6 <= t-min <= t-max <= 64");
  const AkReport a = ak_counterexample_report(t_min, t_max);
  Verdict v;
  v.document = report::envelope("verify ak");
  v.document["t_min"] = t_min;
  v.document["t_max"] = t_max;
  const report::Json payload = report::to_json(a);
  for (const auto& [key, value] : payload.items()) v.document[key] = value;
  std::ostringstream text;
  text << "counterexample P2=" << a.counterexample << "\n";
  for (const auto& row : a.rows) {
    text << "t=" << row.t << " lex=" << row.lex << " complement_of_lex=" << row.complement_of_lex;
    if (row.colex >= 0) text << " colex=" << row.colex;
    text << "\n";
  }
  text << "family_max=" << a.family_max << "\n";
  v.text = text.str();
  v.failure = a.failure;
  close_document(v);
  return v;
}

Verdict verify_nikiforov(int r, std::uint64_t m_max, const RunConfig& cfg) {
  if (r < 2 || r > 8) throw UsageError("verify nikiforov requires 2 <= r <= 8");
  if (m_max < 1) throw UsageError("verify nikiforov requires m-max >= 1");
  if (colex_segment(m_max, r).t() > 12) throw UsageError("verify nikiforov supports colex families on at most 12 vertices");
  const SolverConfig solver = cfg.solver();

  Verdict v;
  v.document = report::envelope("verify nikiforov");
  v.document["r"] = r;
  v.document["m_max"] = m_max;
  v.document["tol"] = cfg.tol;
  report::Json rows = report::Json::array();
  report::Json equalities = report::Json::array();
  std::ostringstream text;
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    const RGraph g = colex_segment(m, r);
    const auto cert = maximize_lagrangian(g, solver);
    const auto n = check_nikiforov(g, cert, cfg.tol);
    report::Json row = report::to_json(n);
    row["converged"] = cert.converged;
    rows.push_back(std::move(row));
    if (n.equality) equalities.push_back(m);
    text << "m=" << m << " lambda=" << fmt(n.value) << " bound=" << fmt(n.bound) << " slack=" << fmt(n.slack)
         << (n.equality ? " equality" : "") << "\n";
    if (!n.holds) {
      record_failure(v, "m=" + std::to_string(m) + ": lambda " + fmt(n.value) + " exceeds the bound " + fmt(n.bound));
    } else if (n.equality != n.integer_x) {
      record_failure(v, "m=" + std::to_string(m) + (n.equality ? ": equality without integer x" : ": no equality at integer x"));
    }
  }
  v.document["equalities"] = std::move(equalities);
  v.document["rows"] = std::move(rows);
  v.text = text.str();
  close_document(v);
  return v;
}

Verdict verify_expansion(int t, int r, std::uint64_t a_max, double constant, const RunConfig& cfg) {
  if (r < 2 || t < r || t > kMaxVertices) throw UsageError("verify expansion requires 2 <= r <= t <= 64");
  if (a_max < 1 || a_max > binomial(t - 2, r - 2)) throw UsageError("verify expansion requires 1 <= a-max <= C(t-2, r-2)");
  if (!(constant > 0.0)) throw UsageError("verify expansion requires a positive constant");
  const SolverConfig solver = cfg.solver();

  Verdict v;
  v.document = report::envelope("verify expansion");
  v.document["t"] = t;
  v.document["r"] = r;
  v.document["a_max"] = a_max;
  v.document["constant"] = constant;
  report::Json rows = report::Json::array();
  std::ostringstream text;
  for (std::uint64_t a = 1; a <= a_max; ++a) {
    const auto c = check_expansion(t, r, a, constant, solver);
    rows.push_back(report::to_json(c));
    text << "a=" << a << " lambda=" << fmt(c.lambda) << " expansion=" << fmt(c.expansion) << " ratio=" << fmt(c.ratio)
         << "\n";
    if (!c.holds) {
      record_failure(v, "a=" + std::to_string(a) + ": deviation is " + fmt(c.ratio) + " error scales, above " +
                            fmt(constant));
    }
  }
  v.document["rows"] = std::move(rows);
  v.text = text.str();
  close_document(v);
  return v;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Hypergraph Lagrangian toolkit"};
  app.name("laglab");
  app.require_subcommand(1);

  std::uint64_t m = 0;
  int r = 0;
  int t = 0;

  auto* colex_cmd = app.add_subcommand("colex", "Print colex(m, r) as an edge list");
  colex_cmd->add_option("m", m)->required();
  colex_cmd->add_option("r", r)->required();

  auto* lex_cmd = app.add_subcommand("lex", "Print lex(m, t, r) as an edge list");
  lex_cmd->add_option("m", m)->required();
  lex_cmd->add_option("t", t)->required();
  lex_cmd->add_option("r", r)->required();

  auto* clique_cmd = app.add_subcommand("clique", "Print the complete r-graph on [t]");
  clique_cmd->add_option("t", t)->required();
  clique_cmd->add_option("r", r)->required();

  RunConfig cfg;
  std::string input;
  auto* lag_cmd = app.add_subcommand("lagrangian", "Maximize the Lagrangian of an edge-list file");
  lag_cmd->add_option("file", input, "Edge-list file, or - for stdin")->required();
  add_run_config(lag_cmd, cfg);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);

  std::uint64_t m_min = 1;
  std::uint64_t m_max = 0;
  auto* ff = verify->add_subcommand("ff", "Colex against every left-compressed family");
  ff->add_option("--r", r)->required();
  ff->add_option("--m-min", m_min)->capture_default_str();
  ff->add_option("--m-max", m_max)->required();
  ff->add_option("--t", t)->required();
  add_run_config(ff, cfg);

  int t_min = 7;
  int t_max = 7;
  auto* ak = verify->add_subcommand("ak", "Degree-square counterexample against lex families");
  ak->add_option("--t-min", t_min)->capture_default_str();
  ak->add_option("--t-max", t_max)->capture_default_str();
  add_run_config(ak, cfg);

  auto* nik = verify->add_subcommand("nikiforov", "Real-root bound on colex Lagrangians");
  nik->add_option("--r", r)->required();
  nik->add_option("--m-max", m_max)->required();
  add_run_config(nik, cfg);

  std::uint64_t a_max = 0;
  double constant = 50.0;
  int expansion_r = 3;
  auto* exp = verify->add_subcommand("expansion", "Near-clique expansion against the solver");
  exp->add_option("--t", t)->required();
  exp->add_option("--r", expansion_r)->capture_default_str();
  exp->add_option("--a-max", a_max)->required();
  exp->add_option("--constant", constant, "Allowed deviation in error-scale units")->capture_default_str();
  add_run_config(exp, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*colex_cmd) {
      out << format_edge_list(colex_segment(m, r));
      return kExitPass;
    } else if (*lex_cmd) {
      out << format_edge_list(lex_segment(m, t, r));
      return kExitPass;
    } else if (*clique_cmd) {
      out << format_edge_list(clique(t, r));
      return kExitPass;
    } else if (*lag_cmd) {
      RGraph g{2, 2};
      if (input == "-") {
        g = read_edge_list(in);
      } else {
        std::ifstream file(input);
        if (!file) throw UsageError("cannot open " + input);
        g = read_edge_list(file);
      }
      const auto cert = maximize_lagrangian(g, cfg.solver());
      Verdict v;
      v.document = report::envelope("lagrangian");
      v.document["graph"] = report::to_json(g);
      v.document["certificate"] = report::to_json(cert);
      v.text = "value=" + fmt(cert.value) + " converged=" + (cert.converged ? "true" : "false") + "\n";
      v.csv = "vertex,weight\n";
      for (Vertex x = 1; x <= cert.witness.size(); ++x) v.csv += std::to_string(x) + "," + fmt(cert.witness[x]) + "\n";
      return finish(v, cfg, out, err);
    } else if (*ff) {
      return finish(verify_ff(r, m_min, m_max, t, cfg), cfg, out, err);
    } else if (*ak) {
      return finish(verify_ak(t_min, t_max), cfg, out, err);
    } else if (*nik) {
      return finish(verify_nikiforov(r, m_max, cfg), cfg, out, err);
    } else if (*exp) {
      return finish(verify_expansion(t, expansion_r, a_max, constant, cfg), cfg, out, err);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}

}  // namespace laglab::cli
