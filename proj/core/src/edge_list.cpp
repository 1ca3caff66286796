#include "laglab/edge_list.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace laglab {

namespace {

std::vector<long long> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    long long value = 0;
    const char* begin = line.data() + i;
    const char* end = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || (ptr != end && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
      throw ParseError(line_no, "expected an integer");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

RGraph read_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  long long r = 0;
  long long t = 0;
  long long m = 0;
  std::vector<std::vector<Vertex>> tuples;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto numbers = parse_numbers(line, line_no);
    if (numbers.empty()) continue;

    if (!have_header) {
      if (numbers.size() != 3) throw ParseError(line_no, "header must be 'r t m'");
      r = numbers[0];
      t = numbers[1];
      m = numbers[2];
      if (r < 2 || t < r || t > kMaxVertices) throw ParseError(line_no, "header requires 2 <= r <= t <= 64");
      if (m < 0 || static_cast<std::uint64_t>(m) > binomial(static_cast<int>(t), static_cast<int>(r))) {
        throw ParseError(line_no, "edge count m out of range");
      }
      have_header = true;
      continue;
    }

    if (static_cast<long long>(numbers.size()) != r) throw ParseError(line_no, "edge must list exactly r vertices");
    std::vector<Vertex> tuple;
    for (std::size_t k = 0; k < numbers.size(); ++k) {
      if (numbers[k] < 1 || numbers[k] > t) throw ParseError(line_no, "vertex out of range 1..t");
      if (k > 0 && numbers[k] <= numbers[k - 1]) throw ParseError(line_no, "vertices must be strictly ascending");
      tuple.push_back(static_cast<Vertex>(numbers[k]));
    }
    if (static_cast<long long>(tuples.size()) == m) throw ParseError(line_no, "more edges than the header declares");
    tuples.push_back(std::move(tuple));
  }

  if (!have_header) throw ParseError(line_no, "missing header");
  if (static_cast<long long>(tuples.size()) != m) throw ParseError(line_no, "fewer edges than the header declares");
  try {
    return RGraph::from_tuples(static_cast<int>(r), static_cast<int>(t), tuples);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

RGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const RGraph& g) {
  out << g.r() << ' ' << g.t() << ' ' << g.size() << '\n';
  for (EdgeMask e : g.edges()) {
    bool first = true;
    for (Vertex v : set_vertices(e)) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << '\n';
  }
}

std::string format_edge_list(const RGraph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace laglab
