#pragma once

#include <cstddef>

#include "edgedist/backend.hpp"
#include "edgedist/graph.hpp"

namespace edgedist::oracle {

inline constexpr std::size_t kMaxSubsetVertices = 24;
inline constexpr std::size_t kMaxOrientationEdges = 16;
inline constexpr std::size_t kMaxDistanceVertices = 10;

// Exhaustive over all 2^n vertex subsets. Among maximum-weight witnesses the
// one with the smallest bitmask wins. Throws PreconditionError when n > 24.
[[nodiscard]] Solution brute_wmc(const Graph& g);
[[nodiscard]] Solution brute_wmis(const Graph& g);

/// Tries all 2^m edge directions. Throws PreconditionError when m > 16.
[[nodiscard]] bool brute_orientation_exists(const Graph& g);

/// Smallest k such that some k edges can be deleted, or some k non-edges
/// added, to land in `backend`'s class. Plain enumeration by subset size, no
/// bounds. Throws PreconditionError when n > 10.
[[nodiscard]] std::size_t brute_distance(const Graph& g, const ClassBackend& backend);

/// Every graph is a member; solves with the exhaustive oracles.
class OracleBackend final : public ClassBackend {
 public:
  [[nodiscard]] std::string name() const override { return "oracle"; }
  [[nodiscard]] bool contains(const Graph&) const override { return true; }
  [[nodiscard]] Solution solve_wmc(const Graph& g) const override { return brute_wmc(g); }
  [[nodiscard]] Solution solve_wmis(const Graph& g) const override { return brute_wmis(g); }
};

}  // namespace edgedist::oracle
