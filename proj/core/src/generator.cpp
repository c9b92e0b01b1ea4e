#include "edgedist/generator.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "edgedist/graph_io.hpp"

namespace edgedist {

Graph random_comparability_graph(std::size_t n, double density, Weight max_weight, std::mt19937_64& rng) {
  if (density < 0.0 || density > 1.0) throw PreconditionError("generator: density must lie in [0, 1]");
  if (max_weight < 0) throw PreconditionError("generator: max weight must be nonnegative");

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);

  // reach[i] over positions: i precedes j in the order relation.
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> reach(n * words, 0);
  std::bernoulli_distribution related(density);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (related(rng)) reach[i * words + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t w = 0; w < words; ++w) {
      for (auto bits = reach[i * words + w]; bits != 0; bits &= bits - 1) {
        const std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        for (std::size_t x = 0; x < words; ++x) reach[i * words + x] |= reach[j * words + x];
      }
    }
  }

  GraphBuilder b(n);
  std::uniform_int_distribution<Weight> weight(0, max_weight);
  for (Vertex v = 0; v < n; ++v) b.set_weight(v, weight(rng));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t w = 0; w < words; ++w) {
      for (auto bits = reach[i * words + w]; bits != 0; bits &= bits - 1) {
        const std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        b.set_edge(order[i], order[j], true);
      }
    }
  }
  return std::move(b).build();
}

GeneratedInstance generate_instance(const GeneratorOptions& options) {
  std::mt19937_64 rng(options.seed);
  Graph base = random_comparability_graph(options.n, options.density, options.max_weight, rng);

  EditMode mode = options.mode.value_or(std::bernoulli_distribution(0.5)(rng) ? EditMode::Apex : EditMode::Add);
  // An Apex certificate deletes edges, so the flips added non-edges of the base; and vice versa.
  auto pool_for = [&](EditMode m) { return m == EditMode::Apex ? base.non_edges() : base.edges(); };
  auto pool = pool_for(mode);
  if (pool.size() < options.k && !options.mode) {
    mode = flipped(mode);
    pool = pool_for(mode);
  }
  if (pool.size() < options.k) {
    throw PreconditionError("generator: only " + std::to_string(pool.size()) + " pairs available for " +
                            std::to_string(options.k) + " flips");
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(options.k);

  GraphBuilder b(base);
  for (auto p : pool) b.set_edge(p.u, p.v, mode == EditMode::Apex);
  std::reverse(pool.begin(), pool.end());
  return {std::move(b).build(), std::move(base), DistantEdgeSet{mode, std::move(pool)}};
}

std::string serialize_instance(const GeneratedInstance& instance, const GeneratorOptions& options) {
  std::ostringstream out;
  out << "# n=" << options.n << " k=" << options.k << " density=" << options.density << " seed=" << options.seed
      << '\n';
  out << "# certificate: " << to_string(instance.certificate.mode) << '\n';
  for (auto p : instance.certificate.pairs) out << "# " << p.u << ' ' << p.v << '\n';
  out << serialize_graph(instance.graph);
  return out.str();
}

}  // namespace edgedist
