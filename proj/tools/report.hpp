#ifndef LAGLAB_TOOLS_REPORT_HPP
#define LAGLAB_TOOLS_REPORT_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "laglab/asymptotics.hpp"
#include "laglab/degree_squares.hpp"
#include "laglab/extremal_search.hpp"
#include "laglab/hypergraph.hpp"
#include "laglab/lagrangian.hpp"

namespace laglab::report {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "lagrangian-lab/1";

/// {"schema": ..., "command": ...}; callers append the payload.
Json envelope(std::string_view command);

Json to_json(const RGraph& g);
Json to_json(const LagrangianCertificate& c);
Json to_json(const SearchReport& s);
Json to_json(const P2Report& p);
Json to_json(const AkReport& a);
Json to_json(const NikiforovVerdict& v);
Json to_json(const ExpansionCheck& c);

/// Edges as space-separated vertex tuples joined by ';', e.g. "1 2 3;1 2 4".
std::string edges_field(const RGraph& g);

/// Per-candidate table `rank,edges,lambda,kkt_residual`, optionally led by an
/// `m` column when several searches share one table.
std::string search_csv_header(bool with_m);
std::string search_csv_rows(const SearchReport& s, bool with_m);

std::string dump(const Json& j);

}  // namespace laglab::report

#endif  // LAGLAB_TOOLS_REPORT_HPP
