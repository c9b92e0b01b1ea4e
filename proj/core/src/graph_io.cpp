#include "edgedist/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace edgedist {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> fields;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto end = text.find('\n');
    auto raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      if (j > i) line.fields.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.fields.empty() || line.fields.front().starts_with('#')) continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

template <typename Int>
Int to_int(std::string_view field, std::size_t line, const char* what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "missing header 'n m'");

  const auto& header = lines.front();
  if (header.fields.size() != 2) throw ParseError(header.number, "header must be 'n m'");
  const auto n = to_int<std::int64_t>(header.fields[0], header.number, "vertex count");
  const auto m = to_int<std::int64_t>(header.fields[1], header.number, "edge count");
  if (n < 0 || m < 0) throw ParseError(header.number, "header values must be nonnegative");
  if (n > 0 && static_cast<std::uint64_t>(m) > static_cast<std::uint64_t>(n) * (n - 1) / 2) {
    throw ParseError(header.number, "edge count exceeds n(n-1)/2");
  }

  std::size_t next = 1;
  std::vector<Weight> weights(static_cast<std::size_t>(n), 1);
  // The weight line is present iff the line count says so; with n == 2 a
  // weight line and an edge line look alike.
  const bool has_weights = lines.size() == static_cast<std::size_t>(m) + 2;
  if (!has_weights && lines.size() != static_cast<std::size_t>(m) + 1) {
    throw ParseError(lines.back().number, "expected " + std::to_string(m) + " edge lines, found " +
                                              std::to_string(lines.size() - 1) + " data lines");
  }
  if (has_weights) {
    const auto& wl = lines[next++];
    if (wl.fields.size() != static_cast<std::size_t>(n)) {
      throw ParseError(wl.number, "weight line must have exactly n entries");
    }
    for (std::size_t v = 0; v < weights.size(); ++v) {
      weights[v] = to_int<Weight>(wl.fields[v], wl.number, "weight");
      if (weights[v] < 0) throw ParseError(wl.number, "negative weight at vertex " + std::to_string(v));
    }
  }

  GraphBuilder b(static_cast<std::size_t>(n));
  for (std::size_t v = 0; v < weights.size(); ++v) b.set_weight(static_cast<Vertex>(v), weights[v]);
  for (; next < lines.size(); ++next) {
    const auto& el = lines[next];
    if (el.fields.size() != 2) throw ParseError(el.number, "edge line must be 'u v'");
    const auto u = to_int<std::int64_t>(el.fields[0], el.number, "vertex id");
    const auto v = to_int<std::int64_t>(el.fields[1], el.number, "vertex id");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(el.number, "vertex id out of range");
    if (u == v) throw ParseError(el.number, "self-loop at vertex " + std::to_string(u));
    if (b.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw ParseError(el.number, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    b.set_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), true);
  }
  return std::move(b).build();
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v > 0) out << ' ';
    out << g.weight(v);
  }
  out << '\n';
  for (auto e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace edgedist
