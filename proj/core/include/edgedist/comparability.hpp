#pragma once

#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edgedist/backend.hpp"
#include "edgedist/graph.hpp"

namespace edgedist {

/// Directed arc u -> v.
struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// One direction per edge of a graph. Only `recognize_and_orient` guarantees
/// transitivity; anything else should go through `verify_orientation`.
class TransitiveOrientation {
 public:
  TransitiveOrientation() = default;

  /// Sorts the arcs. Throws PreconditionError on self-loops, out-of-range ids or repeated arcs.
  TransitiveOrientation(std::size_t n, std::vector<Arc> arcs);

  [[nodiscard]] std::size_t order() const { return n_; }
  [[nodiscard]] std::span<const Arc> arcs() const { return arcs_; }
  [[nodiscard]] std::span<const Vertex> successors(Vertex v) const {
    return {heads_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  /// Kahn order with ties broken by vertex id; nullopt when the arcs contain a cycle.
  [[nodiscard]] std::optional<std::vector<Vertex>> topological_order() const;

  [[nodiscard]] TransitiveOrientation reversed() const;

  friend bool operator==(const TransitiveOrientation& a, const TransitiveOrientation& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> heads_;
};

/// Transitive orientation of `g`, or nullopt when `g` is not a comparability graph.
///
/// Implication-class forcing over a G-decomposition: repeatedly orient some
/// remaining edge, close its implication class under the forcing relation of
/// the remaining graph, and remove the class. A class that forces both
/// directions of an edge proves `g` is not a comparability graph. Runs in
/// O(m * n / 64) word operations. Every orientation is re-verified before it
/// is returned.
[[nodiscard]] std::optional<TransitiveOrientation> recognize_and_orient(const Graph& g);

/// True iff `o` is transitive and acyclic. Throws PreconditionError when `o`
/// does not direct exactly the edges of `g` once each.
[[nodiscard]] bool verify_orientation(const Graph& g, const TransitiveOrientation& o);

/// Maximum-weight clique as a maximum-weight directed path (chain), by one
/// dynamic-programming pass in topological order. Linear in n + m.
[[nodiscard]] Solution wmc_comparability(const Graph& g, const TransitiveOrientation& o);

/// Maximum-weight independent set as a maximum-weight antichain, read off the
/// residual cut of a minimum flow with lower bounds on the split-vertex network.
[[nodiscard]] Solution wmis_comparability(const Graph& g, const TransitiveOrientation& o);

/// min{m, non-edges} <= 4, which is enough for a transitive orientation to exist.
[[nodiscard]] bool trivially_transitive(const Graph& g);

/// One "u -> v" line per arc, arcs ordered by the topological rank of their source.
[[nodiscard]] std::string orientation_dump(const TransitiveOrientation& o);

/// Comparability ("transitive") graphs.
class ComparabilityBackend final : public ClassBackend {
 public:
  [[nodiscard]] std::string name() const override { return "comparability"; }
  [[nodiscard]] bool contains(const Graph& g) const override;
  [[nodiscard]] Solution solve_wmc(const Graph& g) const override;
  [[nodiscard]] Solution solve_wmis(const Graph& g) const override;
  [[nodiscard]] std::optional<std::size_t> distance_upper_bound(const Graph& g) const override;

  /// Orientation of `g`, served from a one-entry cache when `g` was the last graph seen.
  [[nodiscard]] std::optional<TransitiveOrientation> orientation(const Graph& g) const;

 private:
  struct Entry {
    Graph graph;
    std::optional<TransitiveOrientation> orientation;
  };

  mutable std::mutex mutex_;
  mutable std::optional<Entry> last_;
};

}  // namespace edgedist
