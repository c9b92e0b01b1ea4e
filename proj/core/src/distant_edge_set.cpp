#include "edgedist/distant_edge_set.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "edgedist/graph_io.hpp"

namespace edgedist {

std::string to_string(EditMode mode) { return mode == EditMode::Apex ? "apex" : "add"; }

EditMode flipped(EditMode mode) { return mode == EditMode::Apex ? EditMode::Add : EditMode::Apex; }

bool pairs_valid(const Graph& g, const DistantEdgeSet& s) {
  std::vector<VertexPair> seen;
  seen.reserve(s.pairs.size());
  for (auto p : s.pairs) {
    if (!g.in_range(p.u) || !g.in_range(p.v) || p.u == p.v) return false;
    if (g.adjacent(p) != (s.mode == EditMode::Apex)) return false;
    seen.push_back(p.normalized());
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

Graph apply(const Graph& g, const DistantEdgeSet& s) {
  if (!pairs_valid(g, s)) {
    throw PreconditionError("distant-edge set: pairs are not distinct " +
                            std::string(s.mode == EditMode::Apex ? "edges" : "non-edges") + " of the graph");
  }
  GraphBuilder b(g);
  for (auto p : s.pairs) b.set_edge(p.u, p.v, s.mode == EditMode::Add);
  return std::move(b).build();
}

DistantEdgeSet parse_distant_edge_set(std::string_view text) {
  DistantEdgeSet s;
  bool have_mode = false;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty() || tok.front().starts_with('#')) continue;
    if (!have_mode) {
      if (tok.size() != 1 || (tok[0] != "apex" && tok[0] != "add")) {
        throw ParseError(number, "first line must be 'apex' or 'add'");
      }
      s.mode = tok[0] == "apex" ? EditMode::Apex : EditMode::Add;
      have_mode = true;
      continue;
    }
    if (tok.size() != 2) throw ParseError(number, "pair line must be 'u v'");
    Vertex ends[2];
    for (int i = 0; i < 2; ++i) {
      const auto& t = tok[i];
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), ends[i]);
      if (ec != std::errc{} || ptr != t.data() + t.size()) {
        throw ParseError(number, "expected vertex id, got '" + t + "'");
      }
    }
    s.pairs.push_back({ends[0], ends[1]});
  }
  if (!have_mode) throw ParseError(number, "missing mode line");
  return s;
}

std::string serialize_distant_edge_set(const DistantEdgeSet& s) {
  std::ostringstream out;
  out << to_string(s.mode) << '\n';
  for (auto p : s.pairs) out << p.u << ' ' << p.v << '\n';
  return out.str();
}

DistantEdgeSet read_distant_edge_set_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open set file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_distant_edge_set(buf.str());
}

}  // namespace edgedist
