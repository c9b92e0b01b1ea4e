#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "edgedist/distant_edge_set.hpp"
#include "edgedist/graph.hpp"

namespace edgedist {

struct GeneratorOptions {
  std::size_t n = 10;
  std::size_t k = 0;
  double density = 0.5;
  std::uint64_t seed = 1;
  Weight max_weight = 100;  // weights drawn uniformly from [0, max_weight]
  /// Mode of the certificate; drawn by a coin per instance when unset.
  std::optional<EditMode> mode;
};

struct GeneratedInstance {
  Graph graph;
  Graph base;                   // the comparability graph before flipping
  DistantEdgeSet certificate;   // undoes the flips, last flip first
};

/// Comparability graph of a random partial order: a random permutation fixes
/// a linear extension, each forward pair is related with probability
/// `density`, and the relation is transitively closed.
[[nodiscard]] Graph random_comparability_graph(std::size_t n, double density, Weight max_weight,
                                               std::mt19937_64& rng);

/// Random comparability graph with `k` distinct pairs flipped, all flips of
/// one kind so that reversing them is a single-mode distant-edge set.
/// Deterministic for fixed options; with the other options fixed, the
/// instance for k + 1 is the instance for k with one more flip, and that flip
/// heads the certificate. Throws PreconditionError when neither
/// side has k pairs to flip or the options are out of range.
[[nodiscard]] GeneratedInstance generate_instance(const GeneratorOptions& options);

/// Graph text with the options and certificate as leading '#' comments.
[[nodiscard]] std::string serialize_instance(const GeneratedInstance& instance, const GeneratorOptions& options);

}  // namespace edgedist
