#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "edgedist/graph.hpp"

namespace edgedist {

/// Apex: the pairs are edges to delete. Add: the pairs are non-edges to add.
enum class EditMode { Apex, Add };

[[nodiscard]] std::string to_string(EditMode mode);
[[nodiscard]] EditMode flipped(EditMode mode);

/// Set S of edges (Apex) or non-edges (Add) whose application puts a graph in a class.
/// Pair order is significant: the branching solvers always split on the first pair.
struct DistantEdgeSet {
  EditMode mode = EditMode::Apex;
  std::vector<VertexPair> pairs;

  [[nodiscard]] std::size_t k() const { return pairs.size(); }

  friend bool operator==(const DistantEdgeSet&, const DistantEdgeSet&) = default;
};

/// Structural check only: ids in range, distinct unordered pairs, each pair an
/// edge (Apex) or a non-edge (Add) of `g`. Does not test class membership.
[[nodiscard]] bool pairs_valid(const Graph& g, const DistantEdgeSet& s);

/// g - S (Apex) or g + S (Add). Throws PreconditionError when !pairs_valid(g, s).
[[nodiscard]] Graph apply(const Graph& g, const DistantEdgeSet& s);

// Text format: first non-comment line "apex" or "add", then one "u v" pair per line.
[[nodiscard]] DistantEdgeSet parse_distant_edge_set(std::string_view text);
[[nodiscard]] std::string serialize_distant_edge_set(const DistantEdgeSet& s);
[[nodiscard]] DistantEdgeSet read_distant_edge_set_file(const std::string& path);

}  // namespace edgedist
