#include "edgedist/solver.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <string>

namespace edgedist {

namespace {

void require_pair(const Graph& g, VertexPair xy, bool want_edge, const char* what) {
  if (!g.in_range(xy.u) || !g.in_range(xy.v) || xy.u == xy.v) {
    throw PreconditionError(std::string(what) + ": invalid vertex pair");
  }
  if (g.adjacent(xy) != want_edge) {
    throw PreconditionError(std::string(what) + ": {" + std::to_string(xy.u) + "," + std::to_string(xy.v) +
                            "} must be " + (want_edge ? "an edge" : "a non-edge"));
  }
}

void require_member(const ClassBackend& backend, const Graph& edited, const char* what) {
  if (!backend.contains(edited)) {
    throw CertificateError(std::string(what) + ": edited graph is not in class " + backend.name());
  }
}

Solution solve_leaf(const ClassBackend& backend, const Graph& g, SolutionKind kind) {
  return kind == SolutionKind::Clique ? backend.solve_wmc(g) : backend.solve_wmis(g);
}

Solution lift(Solution s, std::span<const Vertex> to_parent) {
  for (auto& v : s.vertices) v = to_parent[v];
  std::sort(s.vertices.begin(), s.vertices.end());
  return s;
}

Solution with_pair(Solution s, const Graph& g, VertexPair xy) {
  s.vertices.push_back(xy.u);
  s.vertices.push_back(xy.v);
  std::sort(s.vertices.begin(), s.vertices.end());
  s.weight += g.weight(xy.u) + g.weight(xy.v);
  return s;
}

std::vector<Vertex> all_but(const Graph& g, Vertex x) {
  std::vector<Vertex> keep;
  keep.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v != x) keep.push_back(v);
  }
  return keep;
}

// Best of (solution inside `around` plus {x, y}) and (solution of `edited`); ties go to the first.
Solution pair_split_one(const Graph& g, VertexPair xy, const Graph& edited, const std::vector<Vertex>& around,
                        SolutionKind kind, const ClassBackend& backend) {
  auto inner = induced_subgraph(g, around);
  auto first = with_pair(lift(solve_leaf(backend, inner.graph, kind), inner.to_parent), g, xy);
  auto second = solve_leaf(backend, edited, kind);
  return first.weight >= second.weight ? first : second;
}

Solution vertex_split_one(const Graph& g, VertexPair xy, SolutionKind kind, const ClassBackend& backend) {
  auto without_x = induced_subgraph(g, all_but(g, xy.u));
  auto without_y = induced_subgraph(g, all_but(g, xy.v));
  auto first = lift(solve_leaf(backend, without_x.graph, kind), without_x.to_parent);
  auto second = lift(solve_leaf(backend, without_y.graph, kind), without_y.to_parent);
  return first.weight >= second.weight ? first : second;
}

// Recursive branching shared by wmc_k and wmis_k. Which of the two splits a
// pair triggers depends on whether the problem's pairwise relation (adjacency
// for cliques) agrees with the pair: a clique may use an Apex edge, so the
// pair splits into "both endpoints in" vs "edge removed"; it can never use an
// Add non-edge, so one endpoint must go.
class Brancher {
 public:
  Brancher(SolutionKind kind, EditMode mode, const ClassBackend& backend, unsigned threads)
      : kind_(kind),
        mode_(mode),
        backend_(backend),
        parallel_depth_(threads <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(threads - 1))) {}

  SolveResult run(const Graph& g, std::vector<Vertex> to_root, std::vector<VertexPair> pairs,
                  std::size_t depth) const {
    if (pairs.empty()) {
      return {lift(solve_leaf(backend_, g, kind_), to_root), 1, depth};
    }
    const VertexPair xy = pairs.front();
    const bool pair_usable = (kind_ == SolutionKind::Clique) == (mode_ == EditMode::Apex);
    return pair_usable ? pair_split(g, to_root, pairs, xy, depth) : vertex_split(g, to_root, pairs, xy, depth);
  }

 private:
  struct Child {
    Graph graph;
    std::vector<Vertex> to_root;
    std::vector<VertexPair> pairs;
  };

  // Induced subgraph on `keep` (sorted local ids) with the surviving pairs renumbered.
  static Child restrict(const Graph& g, const std::vector<Vertex>& to_root, const std::vector<VertexPair>& pairs,
                        const std::vector<Vertex>& keep) {
    auto sub = induced_subgraph(g, keep);
    constexpr Vertex kGone = ~Vertex{0};
    std::vector<Vertex> local(g.order(), kGone);
    for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<Vertex>(i);
    Child c{std::move(sub.graph), {}, {}};
    c.to_root.reserve(keep.size());
    for (auto v : keep) c.to_root.push_back(to_root[v]);
    for (auto p : pairs) {
      if (local[p.u] != kGone && local[p.v] != kGone) c.pairs.push_back({local[p.u], local[p.v]});
    }
    return c;
  }

  std::pair<SolveResult, SolveResult> both(Child a, Child b, std::size_t depth) const {
    if (depth < parallel_depth_) {
      auto fut = std::async(std::launch::async, [this, &a, depth] {
        return run(a.graph, std::move(a.to_root), std::move(a.pairs), depth + 1);
      });
      auto second = run(b.graph, std::move(b.to_root), std::move(b.pairs), depth + 1);
      return {fut.get(), std::move(second)};
    }
    auto first = run(a.graph, std::move(a.to_root), std::move(a.pairs), depth + 1);
    auto second = run(b.graph, std::move(b.to_root), std::move(b.pairs), depth + 1);
    return {std::move(first), std::move(second)};
  }

  static SolveResult pick(SolveResult first, SolveResult second) {
    const auto leaves = first.leaf_calls + second.leaf_calls;
    const auto depth = std::max(first.max_depth, second.max_depth);
    SolveResult out = first.solution.weight >= second.solution.weight ? std::move(first) : std::move(second);
    out.leaf_calls = leaves;
    out.max_depth = depth;
    return out;
  }

  SolveResult vertex_split(const Graph& g, const std::vector<Vertex>& to_root, const std::vector<VertexPair>& pairs,
                           VertexPair xy, std::size_t depth) const {
    auto a = restrict(g, to_root, pairs, all_but(g, xy.u));
    auto b = restrict(g, to_root, pairs, all_but(g, xy.v));
    auto [first, second] = both(std::move(a), std::move(b), depth);
    return pick(std::move(first), std::move(second));
  }

  SolveResult pair_split(const Graph& g, const std::vector<Vertex>& to_root, const std::vector<VertexPair>& pairs,
                         VertexPair xy, std::size_t depth) const {
    const std::vector<VertexPair> rest(pairs.begin() + 1, pairs.end());
    auto around = kind_ == SolutionKind::Clique ? common_neighbors(g, xy.u, xy.v)
                                                : common_non_neighbors(g, xy.u, xy.v);
    auto inner = restrict(g, to_root, rest, around);
    Child edited{mode_ == EditMode::Apex ? delete_edge(g, xy) : add_edge(g, xy), to_root, rest};
    auto [first, second] = both(std::move(inner), std::move(edited), depth);
    first.solution.vertices.push_back(to_root[xy.u]);
    first.solution.vertices.push_back(to_root[xy.v]);
    std::sort(first.solution.vertices.begin(), first.solution.vertices.end());
    first.solution.weight += g.weight(xy.u) + g.weight(xy.v);
    return pick(std::move(first), std::move(second));
  }

  SolutionKind kind_;
  EditMode mode_;
  const ClassBackend& backend_;
  std::size_t parallel_depth_;
};

SolveResult solve_k(const Graph& g, const DistantEdgeSet& s, const ClassBackend& backend, SolverOptions options,
                    SolutionKind kind, const char* what) {
  if (!pairs_valid(g, s)) {
    throw PreconditionError(std::string(what) + ": distant-edge set pairs are not distinct " +
                            (s.mode == EditMode::Apex ? "edges" : "non-edges") + " of the graph");
  }
  require_member(backend, apply(g, s), what);
  std::vector<Vertex> identity(g.order());
  for (Vertex v = 0; v < g.order(); ++v) identity[v] = v;
  std::vector<VertexPair> pairs;
  pairs.reserve(s.pairs.size());
  for (auto p : s.pairs) pairs.push_back(p.normalized());
  return Brancher(kind, s.mode, backend, options.threads).run(g, std::move(identity), std::move(pairs), 0);
}

}  // namespace

Solution wmc_edge_add_one(const Graph& g, VertexPair xy, const ClassBackend& backend) {
  require_pair(g, xy, false, "wmc_edge_add_one");
  require_member(backend, add_edge(g, xy), "wmc_edge_add_one");
  return vertex_split_one(g, xy, SolutionKind::Clique, backend);
}

Solution wmc_edge_apex_one(const Graph& g, VertexPair xy, const ClassBackend& backend) {
  require_pair(g, xy, true, "wmc_edge_apex_one");
  auto edited = delete_edge(g, xy);
  require_member(backend, edited, "wmc_edge_apex_one");
  return pair_split_one(g, xy, edited, common_neighbors(g, xy.u, xy.v), SolutionKind::Clique, backend);
}

Solution wmis_edge_apex_one(const Graph& g, VertexPair xy, const ClassBackend& backend) {
  require_pair(g, xy, true, "wmis_edge_apex_one");
  require_member(backend, delete_edge(g, xy), "wmis_edge_apex_one");
  return vertex_split_one(g, xy, SolutionKind::IndependentSet, backend);
}

Solution wmis_edge_add_one(const Graph& g, VertexPair xy, const ClassBackend& backend) {
  require_pair(g, xy, false, "wmis_edge_add_one");
  auto edited = add_edge(g, xy);
  require_member(backend, edited, "wmis_edge_add_one");
  return pair_split_one(g, xy, edited, common_non_neighbors(g, xy.u, xy.v), SolutionKind::IndependentSet,
                        backend);
}

SolveResult wmc_k(const Graph& g, const DistantEdgeSet& s, const ClassBackend& backend, SolverOptions options) {
  return solve_k(g, s, backend, options, SolutionKind::Clique, "wmc_k");
}

SolveResult wmis_k(const Graph& g, const DistantEdgeSet& s, const ClassBackend& backend, SolverOptions options) {
  return solve_k(g, s, backend, options, SolutionKind::IndependentSet, "wmis_k");
}

}  // namespace edgedist
