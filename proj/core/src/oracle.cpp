#include "edgedist/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "edgedist/comparability.hpp"

namespace edgedist::oracle {

namespace {

Solution brute_subset(const Graph& g, SolutionKind kind) {
  const std::size_t n = g.order();
  if (n > kMaxSubsetVertices) {
    throw PreconditionError("brute oracle: n=" + std::to_string(n) + " exceeds " +
                            std::to_string(kMaxSubsetVertices));
  }
  // mask[v]: vertices compatible with v (adjacent for cliques, non-adjacent for independent sets).
  std::vector<std::uint32_t> compatible(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && g.adjacent(u, v) == (kind == SolutionKind::Clique)) compatible[u] |= 1U << v;
    }
  }
  const std::uint32_t limit = n == 32 ? 0 : (1U << n);
  // ok[mask] iff mask is pairwise compatible; built from mask minus its lowest vertex.
  std::vector<std::uint8_t> ok(limit, 0);
  ok[0] = 1;
  std::uint32_t best_mask = 0;
  Weight best = 0;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    const auto low = static_cast<Vertex>(std::countr_zero(mask));
    const std::uint32_t rest = mask & (mask - 1);
    if (!ok[rest] || (rest & ~compatible[low]) != 0) continue;
    ok[mask] = 1;
    Weight w = 0;
    for (auto bits = mask; bits != 0; bits &= bits - 1) w += g.weight(static_cast<Vertex>(std::countr_zero(bits)));
    if (w > best) {
      best = w;
      best_mask = mask;
    }
  }
  std::vector<Vertex> vs;
  for (auto bits = best_mask; bits != 0; bits &= bits - 1) vs.push_back(static_cast<Vertex>(std::countr_zero(bits)));
  return make_solution(g, kind, std::move(vs));
}

// Gosper's hack: next larger integer with the same popcount.
std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t low = x & (~x + 1);
  const std::uint64_t ripple = x + low;
  return ripple | (((x ^ ripple) >> 2) / low);
}

bool some_subset_of_size(const Graph& g, const std::vector<VertexPair>& pool, std::size_t k, bool add,
                         const ClassBackend& backend) {
  if (k > pool.size()) return false;
  const std::uint64_t end = std::uint64_t{1} << pool.size();
  for (std::uint64_t mask = (std::uint64_t{1} << k) - 1; mask < end;) {
    GraphBuilder b(g);
    for (auto bits = mask; bits != 0; bits &= bits - 1) {
      const auto p = pool[static_cast<std::size_t>(std::countr_zero(bits))];
      b.set_edge(p.u, p.v, add);
    }
    if (backend.contains(std::move(b).build())) return true;
    if (k == 0) break;
    mask = next_combination(mask);
  }
  return false;
}

}  // namespace

Solution brute_wmc(const Graph& g) { return brute_subset(g, SolutionKind::Clique); }

Solution brute_wmis(const Graph& g) { return brute_subset(g, SolutionKind::IndependentSet); }

bool brute_orientation_exists(const Graph& g) {
  const auto edges = g.edges();
  if (edges.size() > kMaxOrientationEdges) {
    throw PreconditionError("brute_orientation_exists: m=" + std::to_string(edges.size()) + " exceeds " +
                            std::to_string(kMaxOrientationEdges));
  }
  if (g.order() > 64) throw PreconditionError("brute_orientation_exists: n exceeds 64");
  const std::size_t m = edges.size();
  std::vector<std::uint64_t> succ(g.order());
  for (std::uint64_t dirs = 0; dirs < (std::uint64_t{1} << m); ++dirs) {
    std::fill(succ.begin(), succ.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      auto [a, b] = edges[i];
      if ((dirs >> i) & 1U) std::swap(a, b);
      succ[a] |= std::uint64_t{1} << b;
    }
    bool transitive = true;
    for (std::size_t v = 0; transitive && v < succ.size(); ++v) {
      for (auto bits = succ[v]; bits != 0; bits &= bits - 1) {
        if ((succ[static_cast<std::size_t>(std::countr_zero(bits))] & ~succ[v]) != 0) {
          transitive = false;
          break;
        }
      }
    }
    if (!transitive) continue;
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < m; ++i) {
      auto [a, b] = edges[i];
      if ((dirs >> i) & 1U) std::swap(a, b);
      arcs.push_back({a, b});
    }
    if (verify_orientation(g, TransitiveOrientation(g.order(), std::move(arcs)))) return true;
  }
  return false;
}

std::size_t brute_distance(const Graph& g, const ClassBackend& backend) {
  if (g.order() > kMaxDistanceVertices) {
    throw PreconditionError("brute_distance: n=" + std::to_string(g.order()) + " exceeds " +
                            std::to_string(kMaxDistanceVertices));
  }
  const auto edges = g.edges();
  const auto non_edges = g.non_edges();
  const std::size_t top = std::max(edges.size(), non_edges.size());
  for (std::size_t k = 0; k <= top; ++k) {
    if (some_subset_of_size(g, edges, k, false, backend)) return k;
    if (some_subset_of_size(g, non_edges, k, true, backend)) return k;
  }
  throw CertificateError("brute_distance: no edit set reaches the class");
}

}  // namespace edgedist::oracle
