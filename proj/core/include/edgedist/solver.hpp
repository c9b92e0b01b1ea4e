#pragma once

#include <cstddef>
#include <cstdint>

#include "edgedist/backend.hpp"
#include "edgedist/distant_edge_set.hpp"
#include "edgedist/graph.hpp"

namespace edgedist {

struct SolveResult {
  Solution solution;
  std::uint64_t leaf_calls = 0;  // backend solver invocations, at most 2^k
  std::size_t max_depth = 0;
};

struct SolverOptions {
  /// Upper bound on concurrently explored branches; 1 runs everything on the calling thread.
  unsigned threads = 1;
};

// Single-pair forms. Each checks that the pair has the right adjacency
// (PreconditionError) and that the edited graph is in the class
// (CertificateError), then makes exactly two backend calls.

/// xy a non-edge with g + xy in the class: best clique of g - x and g - y.
[[nodiscard]] Solution wmc_edge_add_one(const Graph& g, VertexPair xy, const ClassBackend& backend);
/// xy an edge with g - xy in the class: clique of G[N(x) ∩ N(y)] plus {x, y}, or a clique of g - xy.
[[nodiscard]] Solution wmc_edge_apex_one(const Graph& g, VertexPair xy, const ClassBackend& backend);
/// xy an edge with g - xy in the class: best independent set of g - x and g - y.
[[nodiscard]] Solution wmis_edge_apex_one(const Graph& g, VertexPair xy, const ClassBackend& backend);
/// xy a non-edge with g + xy in the class: independent set of the common non-neighbourhood plus
/// {x, y}, or an independent set of g + xy.
[[nodiscard]] Solution wmis_edge_add_one(const Graph& g, VertexPair xy, const ClassBackend& backend);

/// Maximum-weight clique of a graph certified by `s`, in O(2^k) backend calls.
///
/// Branches on the first pair of `s`. Apex sets split into the common
/// neighbourhood of the pair (which then joins the clique) and the graph with
/// the edge deleted; Add sets split into deleting either endpoint. Surviving
/// pairs are carried into each branch in their original order, so k drops by
/// at least one per level. The certificate is checked once, up front.
[[nodiscard]] SolveResult wmc_k(const Graph& g, const DistantEdgeSet& s, const ClassBackend& backend,
                                SolverOptions options = {});

/// Maximum-weight independent set; the complement-dual of `wmc_k` (Apex sets
/// split on vertex deletion, Add sets on the common non-neighbourhood).
[[nodiscard]] SolveResult wmis_k(const Graph& g, const DistantEdgeSet& s, const ClassBackend& backend,
                                 SolverOptions options = {});

}  // namespace edgedist
