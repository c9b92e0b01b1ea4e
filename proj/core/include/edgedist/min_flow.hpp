#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace edgedist {

/// Flow network whose arcs carry a lower bound as well as a capacity.
///
/// `min_flow` first finds a feasible flow through the usual circulation
/// reduction (super source/sink plus a return arc sink->source), then cancels
/// as much as possible by pushing a max flow from the sink back to the source
/// in the residual network. Max flows are Dinic's algorithm.
class LowerBoundFlow {
 public:
  using Capacity = std::int64_t;
  static constexpr Capacity kInfinite = Capacity{1} << 60;

  explicit LowerBoundFlow(std::size_t nodes);

  [[nodiscard]] std::size_t node_count() const { return nodes_; }

  /// Returns the arc id; requires 0 <= lower <= upper.
  std::size_t add_arc(std::size_t from, std::size_t to, Capacity lower, Capacity upper);

  /// Minimum value of a feasible source->sink flow, or nullopt when no feasible flow exists.
  /// May be called once.
  [[nodiscard]] std::optional<Capacity> min_flow(std::size_t source, std::size_t sink);

  /// Flow on a user arc after `min_flow`.
  [[nodiscard]] Capacity flow(std::size_t arc) const;

  /// Nodes reachable from `from` along residual arcs (forward: upper - flow, backward: flow - lower).
  [[nodiscard]] std::vector<bool> residual_reachable(std::size_t from) const;

 private:
  struct Edge {
    std::size_t to;
    Capacity cap;
  };

  std::size_t add_edge(std::size_t from, std::size_t to, Capacity cap);
  Capacity max_flow(std::size_t s, std::size_t t);
  bool build_levels(std::size_t s, std::size_t t);
  Capacity augment(std::size_t v, std::size_t t, Capacity limit);

  std::size_t nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<Capacity> lower_;     // per user arc
  std::vector<std::size_t> user_;   // user arc id -> edge index
  std::vector<Capacity> excess_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
  bool solved_ = false;
};

}  // namespace edgedist
