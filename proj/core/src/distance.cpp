#include "edgedist/distance.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace edgedist {

namespace {

// First certificate among the k-subsets of `pool`, visited in lexicographic index order.
std::optional<DistantEdgeSet> search_side(const Graph& g, const std::vector<VertexPair>& pool, std::size_t k,
                                          EditMode mode, const ClassBackend& backend, std::uint64_t& tested) {
  if (k > pool.size()) return std::nullopt;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  const bool add = mode == EditMode::Add;
  while (true) {
    GraphBuilder b(g);
    for (auto i : idx) b.set_edge(pool[i].u, pool[i].v, add);
    ++tested;
    if (backend.contains(std::move(b).build())) {
      DistantEdgeSet s{mode, {}};
      for (auto i : idx) s.pairs.push_back(pool[i]);
      return s;
    }
    // Advance to the next combination.
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
    if (i == 0) return std::nullopt;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

DistanceResult find_distance(const Graph& g, const ClassBackend& backend, std::size_t k_max) {
  const auto bound = backend.distance_upper_bound(g);
  const std::size_t limit = bound ? std::min(k_max, *bound) : k_max;
  const auto edges = g.edges();
  const auto non_edges = g.non_edges();
  std::uint64_t tested = 0;

  for (std::size_t k = 0; k <= limit; ++k) {
    if (auto s = search_side(g, edges, k, EditMode::Apex, backend, tested)) {
      return DistanceReport{k, std::move(*s), true, tested};
    }
    if (k > 0) {
      if (auto s = search_side(g, non_edges, k, EditMode::Add, backend, tested)) {
        return DistanceReport{k, std::move(*s), true, tested};
      }
    }
  }
  if (bound && *bound <= k_max) {
    throw std::logic_error("find_distance: no certificate within the class's own distance bound");
  }
  return ExceedsKMax{k_max, tested};
}

bool validate_set(const Graph& g, const DistantEdgeSet& s, const ClassBackend& backend) {
  return pairs_valid(g, s) && backend.contains(apply(g, s));
}

}  // namespace edgedist
