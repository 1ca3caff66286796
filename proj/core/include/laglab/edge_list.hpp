#ifndef LAGLAB_EDGE_LIST_HPP
#define LAGLAB_EDGE_LIST_HPP

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "laglab/hypergraph.hpp"

namespace laglab {

/// Malformed edge-list input. Carries the offending 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Edge-list text format:
//
//   r t m
//   v1 v2 ... vr      (m lines, strictly ascending vertex ids in 1..t)
//
// Blank lines and anything after '#' are ignored. The writer emits edges in
// colex order with single spaces and '\n' line ends, so writing a parsed
// canonical file reproduces it byte for byte.

RGraph read_edge_list(std::istream& in);
RGraph parse_edge_list(std::string_view text);

void write_edge_list(std::ostream& out, const RGraph& g);
std::string format_edge_list(const RGraph& g);

}  // namespace laglab

#endif  // LAGLAB_EDGE_LIST_HPP
