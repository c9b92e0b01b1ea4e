#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace edgedist {

using Vertex = std::uint32_t;
using Weight = std::int64_t;

/// Unordered vertex pair, stored with `u < v` once normalized.
struct VertexPair {
  Vertex u = 0;
  Vertex v = 0;

  [[nodiscard]] VertexPair normalized() const { return u < v ? *this : VertexPair{v, u}; }
  [[nodiscard]] bool touches(Vertex x) const { return u == x || v == x; }

  friend bool operator==(const VertexPair& a, const VertexPair& b) {
    auto x = a.normalized();
    auto y = b.normalized();
    return x.u == y.u && x.v == y.v;
  }
  friend bool operator<(const VertexPair& a, const VertexPair& b) {
    auto x = a.normalized();
    auto y = b.normalized();
    return x.u != y.u ? x.u < y.u : x.v < y.v;
  }
};

/// Raised when an operation's input violates its stated precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1 with nonnegative integer weights.
///
/// Adjacency is a dense symmetric bit matrix, so `adjacent` is O(1) and
/// neighbourhood set operations run a word at a time. Values are immutable:
/// every edit returns a new graph.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on `n` vertices with unit weights.
  explicit Graph(std::size_t n);

  /// Validates the edge list: no self-loops, no duplicates, ids < n, weights >= 0.
  Graph(std::size_t n, std::vector<Weight> weights, std::span<const VertexPair> edges);

  [[nodiscard]] std::size_t order() const { return n_; }
  [[nodiscard]] std::size_t edge_count() const { return m_; }
  [[nodiscard]] std::size_t non_edge_count() const { return n_ == 0 ? 0 : n_ * (n_ - 1) / 2 - m_; }

  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
    return (row_ptr(u)[v >> 6] >> (v & 63)) & 1U;
  }
  [[nodiscard]] bool adjacent(VertexPair p) const { return adjacent(p.u, p.v); }

  [[nodiscard]] Weight weight(Vertex v) const { return weights_[v]; }
  [[nodiscard]] std::span<const Weight> weights() const { return weights_; }

  [[nodiscard]] std::size_t degree(Vertex v) const;
  [[nodiscard]] std::size_t max_degree() const;
  [[nodiscard]] std::size_t min_degree() const;

  [[nodiscard]] std::vector<Vertex> neighbors(Vertex v) const;
  [[nodiscard]] std::vector<VertexPair> edges() const;
  [[nodiscard]] std::vector<VertexPair> non_edges() const;

  /// Bit row of `v`'s neighbourhood; bit `u` of word `u / 64` is set iff uv is an edge.
  [[nodiscard]] std::span<const std::uint64_t> row(Vertex v) const {
    return {row_ptr(v), words_};
  }
  [[nodiscard]] std::size_t words_per_row() const { return words_; }

  [[nodiscard]] Weight total_weight(std::span<const Vertex> vs) const;
  [[nodiscard]] bool in_range(Vertex v) const { return v < n_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.weights_ == b.weights_ && a.bits_ == b.bits_;
  }

 private:
  friend class GraphBuilder;

  [[nodiscard]] const std::uint64_t* row_ptr(Vertex v) const { return bits_.data() + v * words_; }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<Weight> weights_;
};

/// Mutable staging area for building a Graph without per-edge validation cost.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  explicit GraphBuilder(const Graph& g);

  [[nodiscard]] std::size_t order() const { return g_.n_; }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }

  void set_weight(Vertex v, Weight w);
  void set_edge(Vertex u, Vertex v, bool present);
  void flip_all();

  [[nodiscard]] Graph build() &&;

 private:
  std::uint64_t* row_ptr(Vertex v) { return g_.bits_.data() + v * g_.words_; }

  Graph g_;
};

/// Induced subgraph relabelled to 0..|X|-1 together with the map back to parent ids.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

enum class SolutionKind { Clique, IndependentSet };

[[nodiscard]] std::string to_string(SolutionKind kind);

/// A certified clique or independent set; `vertices` is kept sorted.
struct Solution {
  SolutionKind kind = SolutionKind::Clique;
  std::vector<Vertex> vertices;
  Weight weight = 0;

  friend bool operator==(const Solution&, const Solution&) = default;
};

[[nodiscard]] Solution make_solution(const Graph& g, SolutionKind kind, std::vector<Vertex> vertices);

/// True iff the vertex set has the kind's pairwise property in `g` and the weight recomputes.
[[nodiscard]] bool is_certified(const Graph& g, const Solution& s);

[[nodiscard]] Graph complement(const Graph& g);

/// Throws PreconditionError for out-of-range or repeated ids in `x`.
[[nodiscard]] InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> x);

[[nodiscard]] Graph delete_edge(const Graph& g, VertexPair p);
[[nodiscard]] Graph add_edge(const Graph& g, VertexPair p);
[[nodiscard]] InducedSubgraph delete_vertex(const Graph& g, Vertex v);

/// N(x) ∩ N(y), sorted.
[[nodiscard]] std::vector<Vertex> common_neighbors(const Graph& g, Vertex x, Vertex y);
/// V \ (N(x) ∪ N(y) ∪ {x, y}), sorted.
[[nodiscard]] std::vector<Vertex> common_non_neighbors(const Graph& g, Vertex x, Vertex y);

// Named families used throughout tests and tools.
[[nodiscard]] Graph complete_graph(std::size_t n);
[[nodiscard]] Graph path_graph(std::size_t n);
[[nodiscard]] Graph cycle_graph(std::size_t n);
[[nodiscard]] Graph with_weights(const Graph& g, std::vector<Weight> weights);
[[nodiscard]] Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace edgedist
