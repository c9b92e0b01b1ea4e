#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "edgedist/graph.hpp"

namespace edgedist {

/// Malformed graph or distant-edge-set text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Text format, '#' comment lines and blank lines ignored:
//   n m
//   w_0 ... w_{n-1}      (optional; all weights default to 1)
//   u v                  (m lines)
[[nodiscard]] Graph parse_graph(std::string_view text);

/// Always writes the weight line, so parse_graph(serialize_graph(g)) == g.
[[nodiscard]] std::string serialize_graph(const Graph& g);

[[nodiscard]] Graph read_graph_file(const std::string& path);

}  // namespace edgedist
