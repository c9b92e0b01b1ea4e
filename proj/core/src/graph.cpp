#include "edgedist/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace edgedist {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void require_vertex(const Graph& g, Vertex v, const char* what) {
  if (!g.in_range(v)) {
    throw PreconditionError(std::string(what) + ": vertex " + std::to_string(v) +
                            " out of range for n=" + std::to_string(g.order()));
  }
}

void require_distinct(Vertex x, Vertex y, const char* what) {
  if (x == y) {
    throw PreconditionError(std::string(what) + ": endpoints must differ");
  }
}

}  // namespace

Graph::Graph(std::size_t n)
    : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0), weights_(n, 1) {}

Graph::Graph(std::size_t n, std::vector<Weight> weights, std::span<const VertexPair> edges) {
  if (weights.size() != n) {
    throw PreconditionError("graph: expected " + std::to_string(n) + " weights, got " +
                            std::to_string(weights.size()));
  }
  GraphBuilder b(n);
  for (std::size_t v = 0; v < n; ++v) {
    b.set_weight(static_cast<Vertex>(v), weights[v]);
  }
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw PreconditionError("graph: edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw PreconditionError("graph: self-loop at vertex " + std::to_string(e.u));
    }
    if (b.adjacent(e.u, e.v)) {
      throw PreconditionError("graph: duplicate edge " + std::to_string(e.u) + " " +
                              std::to_string(e.v));
    }
    b.set_edge(e.u, e.v, true);
  }
  *this = std::move(b).build();
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::size_t Graph::min_degree() const {
  if (n_ == 0) return 0;
  std::size_t best = n_;
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (std::size_t w = 0; w < r.size(); ++w) {
    for (auto bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
    }
  }
  return out;
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<VertexPair> Graph::non_edges() const {
  std::vector<VertexPair> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (!adjacent(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

Weight Graph::total_weight(std::span<const Vertex> vs) const {
  Weight total = 0;
  for (Vertex v : vs) total += weights_[v];
  return total;
}

GraphBuilder::GraphBuilder(std::size_t n) : g_(n) {}

GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

void GraphBuilder::set_weight(Vertex v, Weight w) {
  if (w < 0) {
    throw PreconditionError("graph: negative weight " + std::to_string(w) + " at vertex " +
                            std::to_string(v));
  }
  g_.weights_.at(v) = w;
}

void GraphBuilder::set_edge(Vertex u, Vertex v, bool present) {
  if (u == v) throw PreconditionError("graph: self-loop at vertex " + std::to_string(u));
  const std::uint64_t bu = std::uint64_t{1} << (u & 63);
  const std::uint64_t bv = std::uint64_t{1} << (v & 63);
  if (present) {
    row_ptr(u)[v >> 6] |= bv;
    row_ptr(v)[u >> 6] |= bu;
  } else {
    row_ptr(u)[v >> 6] &= ~bv;
    row_ptr(v)[u >> 6] &= ~bu;
  }
}

void GraphBuilder::flip_all() {
  const std::size_t n = g_.n_;
  const std::size_t tail = n & 63;
  for (Vertex v = 0; v < n; ++v) {
    auto* r = row_ptr(v);
    for (std::size_t w = 0; w < g_.words_; ++w) r[w] = ~r[w];
    if (tail != 0) r[g_.words_ - 1] &= (std::uint64_t{1} << tail) - 1;
    r[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
}

Graph GraphBuilder::build() && {
  std::size_t twice = 0;
  for (auto w : g_.bits_) twice += static_cast<std::size_t>(std::popcount(w));
  g_.m_ = twice / 2;
  return std::move(g_);
}

std::string to_string(SolutionKind kind) {
  return kind == SolutionKind::Clique ? "clique" : "is";
}

Solution make_solution(const Graph& g, SolutionKind kind, std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  Solution s{kind, std::move(vertices), 0};
  s.weight = g.total_weight(s.vertices);
  return s;
}

bool is_certified(const Graph& g, const Solution& s) {
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    if (!g.in_range(s.vertices[i])) return false;
    for (std::size_t j = i + 1; j < s.vertices.size(); ++j) {
      if (s.vertices[i] == s.vertices[j]) return false;
      const bool adj = g.adjacent(s.vertices[i], s.vertices[j]);
      if (adj != (s.kind == SolutionKind::Clique)) return false;
    }
  }
  return g.total_weight(s.vertices) == s.weight;
}

Graph complement(const Graph& g) {
  GraphBuilder b(g);
  b.flip_all();
  return std::move(b).build();
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> x) {
  std::vector<bool> seen(g.order(), false);
  for (Vertex v : x) {
    require_vertex(g, v, "induced_subgraph");
    if (seen[v]) throw PreconditionError("induced_subgraph: repeated vertex " + std::to_string(v));
    seen[v] = true;
  }
  GraphBuilder b(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    b.set_weight(static_cast<Vertex>(i), g.weight(x[i]));
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (g.adjacent(x[i], x[j])) b.set_edge(static_cast<Vertex>(i), static_cast<Vertex>(j), true);
    }
  }
  return {std::move(b).build(), std::vector<Vertex>(x.begin(), x.end())};
}

Graph delete_edge(const Graph& g, VertexPair p) {
  require_vertex(g, p.u, "delete_edge");
  require_vertex(g, p.v, "delete_edge");
  require_distinct(p.u, p.v, "delete_edge");
  if (!g.adjacent(p)) {
    throw PreconditionError("delete_edge: {" + std::to_string(p.u) + "," + std::to_string(p.v) +
                            "} is not an edge");
  }
  GraphBuilder b(g);
  b.set_edge(p.u, p.v, false);
  return std::move(b).build();
}

Graph add_edge(const Graph& g, VertexPair p) {
  require_vertex(g, p.u, "add_edge");
  require_vertex(g, p.v, "add_edge");
  require_distinct(p.u, p.v, "add_edge");
  if (g.adjacent(p)) {
    throw PreconditionError("add_edge: {" + std::to_string(p.u) + "," + std::to_string(p.v) +
                            "} is already an edge");
  }
  GraphBuilder b(g);
  b.set_edge(p.u, p.v, true);
  return std::move(b).build();
}

InducedSubgraph delete_vertex(const Graph& g, Vertex v) {
  require_vertex(g, v, "delete_vertex");
  std::vector<Vertex> keep;
  keep.reserve(g.order() - 1);
  for (Vertex u = 0; u < g.order(); ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced_subgraph(g, keep);
}

std::vector<Vertex> common_neighbors(const Graph& g, Vertex x, Vertex y) {
  require_vertex(g, x, "common_neighbors");
  require_vertex(g, y, "common_neighbors");
  require_distinct(x, y, "common_neighbors");
  std::vector<Vertex> out;
  auto rx = g.row(x);
  auto ry = g.row(y);
  for (std::size_t w = 0; w < rx.size(); ++w) {
    for (auto bits = rx[w] & ry[w]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
    }
  }
  return out;
}

std::vector<Vertex> common_non_neighbors(const Graph& g, Vertex x, Vertex y) {
  require_vertex(g, x, "common_non_neighbors");
  require_vertex(g, y, "common_non_neighbors");
  require_distinct(x, y, "common_non_neighbors");
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v != x && v != y && !g.adjacent(v, x) && !g.adjacent(v, y)) out.push_back(v);
  }
  return out;
}

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  b.flip_all();
  return std::move(b).build();
}

Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.set_edge(v - 1, v, true);
  return std::move(b).build();
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle_graph: need n >= 3");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.set_edge(v, static_cast<Vertex>((v + 1) % n), true);
  return std::move(b).build();
}

Graph with_weights(const Graph& g, std::vector<Weight> weights) {
  if (weights.size() != g.order()) throw PreconditionError("with_weights: size mismatch");
  GraphBuilder b(g);
  for (Vertex v = 0; v < g.order(); ++v) b.set_weight(v, weights[v]);
  return std::move(b).build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const auto shift = static_cast<Vertex>(a.order());
  GraphBuilder out(a.order() + b.order());
  for (Vertex v = 0; v < a.order(); ++v) out.set_weight(v, a.weight(v));
  for (Vertex v = 0; v < b.order(); ++v) out.set_weight(shift + v, b.weight(v));
  for (auto e : a.edges()) out.set_edge(e.u, e.v, true);
  for (auto e : b.edges()) out.set_edge(shift + e.u, shift + e.v, true);
  return std::move(out).build();
}

}  // namespace edgedist
