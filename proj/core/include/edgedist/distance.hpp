#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>

#include "edgedist/backend.hpp"
#include "edgedist/distant_edge_set.hpp"
#include "edgedist/graph.hpp"

namespace edgedist {

/// Edge distance of a graph to a class, with a certifying set of size `xi`.
struct DistanceReport {
  std::size_t xi = 0;
  DistantEdgeSet witness;
  bool explored_both_sides = true;  // every depth below xi was exhausted on both sides
  std::uint64_t memberships_tested = 0;
};

struct ExceedsKMax {
  std::size_t k_max = 0;
  std::uint64_t memberships_tested = 0;
};

using DistanceResult = std::variant<DistanceReport, ExceedsKMax>;

/// Iterative deepening over k = 0, 1, ...: all k-subsets of edges (Apex) and
/// then of non-edges (Add), each in lexicographic order of the sorted pairs.
/// The first certificate found wins, so Apex wins ties. The search stops at
/// the class's own distance bound when it has one.
[[nodiscard]] DistanceResult find_distance(const Graph& g, const ClassBackend& backend, std::size_t k_max);

/// Pairs are distinct edges (Apex) or non-edges (Add) of `g` and the edited graph is in the class.
[[nodiscard]] bool validate_set(const Graph& g, const DistantEdgeSet& s, const ClassBackend& backend);

}  // namespace edgedist
