#include "edgedist/comparability.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "edgedist/min_flow.hpp"

namespace edgedist {

namespace {

template <typename F>
void for_each_bit(std::uint64_t bits, std::size_t word, F&& f) {
  for (; bits != 0; bits &= bits - 1) {
    f(static_cast<Vertex>(word * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
  }
}

// Sorted adjacency lists of `g` with a stable id per directed pair (u, v).
class ArcIndex {
 public:
  explicit ArcIndex(const Graph& g) : offsets_(g.order() + 1, 0) {
    for (Vertex u = 0; u < g.order(); ++u) {
      auto nb = g.neighbors(u);
      heads_.insert(heads_.end(), nb.begin(), nb.end());
      offsets_[u + 1] = heads_.size();
    }
  }

  [[nodiscard]] std::size_t size() const { return heads_.size(); }

  [[nodiscard]] std::size_t id(Vertex u, Vertex v) const {
    auto first = heads_.begin() + static_cast<std::ptrdiff_t>(offsets_[u]);
    auto last = heads_.begin() + static_cast<std::ptrdiff_t>(offsets_[u + 1]);
    return static_cast<std::size_t>(std::lower_bound(first, last, v) - heads_.begin());
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> heads_;
};

class Recognizer {
 public:
  explicit Recognizer(const Graph& g)
      : g_(g), words_(g.words_per_row()), arcs_(g), label_(arcs_.size(), 0) {
    remaining_.reserve(g.order() * words_);
    for (Vertex v = 0; v < g.order(); ++v) {
      auto r = g.row(v);
      remaining_.insert(remaining_.end(), r.begin(), r.end());
    }
  }

  std::optional<TransitiveOrientation> run() {
    std::vector<Arc> oriented;
    oriented.reserve(g_.edge_count());
    std::uint32_t cls = 0;
    Vertex cursor = 0;
    while (true) {
      auto start = next_edge(cursor);
      if (!start) break;
      ++cls;
      std::vector<Arc> members;
      if (!close_class(*start, cls, members)) return std::nullopt;
      for (auto a : members) {
        oriented.push_back(a);
        clear(a.from, a.to);
        clear(a.to, a.from);
      }
    }
    return TransitiveOrientation(g_.order(), std::move(oriented));
  }

 private:
  std::uint64_t* row(Vertex v) { return remaining_.data() + v * words_; }
  void clear(Vertex u, Vertex v) { row(u)[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::optional<Arc> next_edge(Vertex& cursor) {
    for (; cursor < g_.order(); ++cursor) {
      const auto* r = row(cursor);
      for (std::size_t w = 0; w < words_; ++w) {
        if (r[w] != 0) {
          return Arc{cursor, static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(r[w])))};
        }
      }
    }
    return std::nullopt;
  }

  // Closes the implication class of `seed` in the remaining graph.
  // ab forces ac when c ~ a, c !~ b; and cb when c ~ b, c !~ a.
  bool close_class(Arc seed, std::uint32_t cls, std::vector<Arc>& members) {
    bool ok = true;
    auto force = [&](Vertex a, Vertex b) {
      if (label_[arcs_.id(b, a)] == cls) {
        ok = false;
        return;
      }
      auto& l = label_[arcs_.id(a, b)];
      if (l == cls) return;
      l = cls;
      members.push_back({a, b});
    };
    force(seed.from, seed.to);
    for (std::size_t next = 0; ok && next < members.size(); ++next) {
      const auto [u, v] = members[next];
      const auto* ru = row(u);
      const auto* rv = row(v);
      for (std::size_t w = 0; ok && w < words_; ++w) {
        for_each_bit(ru[w] & ~rv[w], w, [&](Vertex c) {
          if (ok && c != v) force(u, c);
        });
        for_each_bit(rv[w] & ~ru[w], w, [&](Vertex c) {
          if (ok && c != u) force(c, v);
        });
      }
    }
    return ok;
  }

  const Graph& g_;
  std::size_t words_;
  ArcIndex arcs_;
  std::vector<std::uint32_t> label_;
  std::vector<std::uint64_t> remaining_;
};

void check_cover(const Graph& g, const TransitiveOrientation& o, const char* what) {
  if (o.order() != g.order()) {
    throw PreconditionError(std::string(what) + ": orientation and graph sizes differ");
  }
  if (o.arcs().size() != g.edge_count()) {
    throw PreconditionError(std::string(what) + ": orientation has " + std::to_string(o.arcs().size()) +
                            " arcs for " + std::to_string(g.edge_count()) + " edges");
  }
  for (auto a : o.arcs()) {
    if (!g.adjacent(a.from, a.to)) {
      throw PreconditionError(std::string(what) + ": arc " + std::to_string(a.from) + "->" +
                              std::to_string(a.to) + " is not an edge");
    }
  }
}

}  // namespace

TransitiveOrientation::TransitiveOrientation(std::size_t n, std::vector<Arc> arcs)
    : n_(n), arcs_(std::move(arcs)), offsets_(n + 1, 0) {
  std::sort(arcs_.begin(), arcs_.end());
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const auto a = arcs_[i];
    if (a.from >= n || a.to >= n || a.from == a.to) {
      throw PreconditionError("orientation: bad arc " + std::to_string(a.from) + "->" + std::to_string(a.to));
    }
    if (i > 0 && arcs_[i - 1] == a) {
      throw PreconditionError("orientation: repeated arc " + std::to_string(a.from) + "->" +
                              std::to_string(a.to));
    }
    ++offsets_[a.from + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  heads_.reserve(arcs_.size());
  for (auto a : arcs_) heads_.push_back(a.to);
}

std::optional<std::vector<Vertex>> TransitiveOrientation::topological_order() const {
  std::vector<std::size_t> indegree(n_, 0);
  for (auto a : arcs_) ++indegree[a.to];
  std::deque<Vertex> ready;
  for (Vertex v = 0; v < n_; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::vector<Vertex> order;
  order.reserve(n_);
  while (!ready.empty()) {
    auto v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (auto u : successors(v)) {
      if (--indegree[u] == 0) ready.push_back(u);
    }
  }
  if (order.size() != n_) return std::nullopt;
  return order;
}

TransitiveOrientation TransitiveOrientation::reversed() const {
  std::vector<Arc> flipped;
  flipped.reserve(arcs_.size());
  for (auto a : arcs_) flipped.push_back({a.to, a.from});
  return {n_, std::move(flipped)};
}

std::optional<TransitiveOrientation> recognize_and_orient(const Graph& g) {
  auto o = Recognizer(g).run();
  if (o && !verify_orientation(g, *o)) {
    throw std::logic_error("recognize_and_orient: produced an orientation that fails verification");
  }
  return o;
}

bool verify_orientation(const Graph& g, const TransitiveOrientation& o) {
  check_cover(g, o, "verify_orientation");
  const std::size_t words = g.words_per_row();
  std::vector<std::uint64_t> out(g.order() * words, 0);
  for (auto a : o.arcs()) {
    auto& cell = out[a.to * words + (a.from >> 6)];
    if ((cell >> (a.from & 63)) & 1U) {
      throw PreconditionError("verify_orientation: edge " + std::to_string(a.from) + " " +
                              std::to_string(a.to) + " is directed both ways");
    }
    out[a.from * words + (a.to >> 6)] |= std::uint64_t{1} << (a.to & 63);
  }
  // u->v and v->w need u->w: succ(v) must be contained in succ(u).
  for (auto a : o.arcs()) {
    const auto* su = out.data() + a.from * words;
    const auto* sv = out.data() + a.to * words;
    for (std::size_t w = 0; w < words; ++w) {
      if ((sv[w] & ~su[w]) != 0) return false;
    }
  }
  return o.topological_order().has_value();
}

Solution wmc_comparability(const Graph& g, const TransitiveOrientation& o) {
  check_cover(g, o, "wmc_comparability");
  auto order = o.topological_order();
  if (!order) throw PreconditionError("wmc_comparability: orientation has a cycle");

  const std::size_t n = g.order();
  if (n == 0) return {SolutionKind::Clique, {}, 0};
  constexpr Vertex kNone = ~Vertex{0};
  std::vector<Weight> best(g.weights().begin(), g.weights().end());
  std::vector<Vertex> pred(n, kNone);
  for (auto v : *order) {
    for (auto u : o.successors(v)) {
      if (best[v] + g.weight(u) > best[u]) {
        best[u] = best[v] + g.weight(u);
        pred[u] = v;
      }
    }
  }
  Vertex end = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (best[v] > best[end]) end = v;
  }
  std::vector<Vertex> chain;
  for (Vertex v = end; v != kNone; v = pred[v]) chain.push_back(v);

  // In any acyclic orientation every clique is a directed path, so the
  // heaviest path is optimal as soon as it is itself a clique. An orientation
  // that is not transitive can only show up here as a non-clique path.
  auto s = make_solution(g, SolutionKind::Clique, std::move(chain));
  if (!is_certified(g, s)) {
    throw PreconditionError("wmc_comparability: orientation is not transitive");
  }
  return s;
}

Solution wmis_comparability(const Graph& g, const TransitiveOrientation& o) {
  if (!verify_orientation(g, o)) {
    throw PreconditionError("wmis_comparability: orientation is not transitive");
  }
  const std::size_t n = g.order();
  auto in = [](Vertex v) { return 2 * static_cast<std::size_t>(v); };
  auto out = [](Vertex v) { return 2 * static_cast<std::size_t>(v) + 1; };
  const std::size_t source = 2 * n;
  const std::size_t sink = 2 * n + 1;
  constexpr auto kInf = LowerBoundFlow::kInfinite;

  // Each unit of flow is a chain; v must be covered by w(v) chains. The
  // orientation is transitive, so its arcs are already the full order relation.
  LowerBoundFlow net(2 * n + 2);
  for (Vertex v = 0; v < n; ++v) {
    net.add_arc(source, in(v), 0, kInf);
    net.add_arc(in(v), out(v), g.weight(v), kInf);
    net.add_arc(out(v), sink, 0, kInf);
  }
  for (auto a : o.arcs()) net.add_arc(out(a.from), in(a.to), 0, kInf);

  auto value = net.min_flow(source, sink);
  if (!value) throw std::logic_error("wmis_comparability: chain-cover network infeasible");

  // Nothing leaves the sink side of the final residual cut, so the vertices
  // whose split arc crosses it form an antichain carrying exactly the flow value.
  auto reach = net.residual_reachable(sink);
  std::vector<Vertex> antichain;
  for (Vertex v = 0; v < n; ++v) {
    if (reach[out(v)] && !reach[in(v)]) antichain.push_back(v);
  }
  auto s = make_solution(g, SolutionKind::IndependentSet, std::move(antichain));
  if (s.weight != *value || !is_certified(g, s)) {
    throw std::logic_error("wmis_comparability: residual cut is not a maximum antichain");
  }
  return s;
}

bool trivially_transitive(const Graph& g) {
  return std::min(g.edge_count(), g.non_edge_count()) <= 4;
}

std::string orientation_dump(const TransitiveOrientation& o) {
  auto order = o.topological_order();
  if (!order) throw PreconditionError("orientation_dump: orientation has a cycle");
  std::vector<std::size_t> rank(o.order());
  for (std::size_t i = 0; i < order->size(); ++i) rank[(*order)[i]] = i;
  std::vector<Arc> arcs(o.arcs().begin(), o.arcs().end());
  std::sort(arcs.begin(), arcs.end(), [&](Arc a, Arc b) {
    return rank[a.from] != rank[b.from] ? rank[a.from] < rank[b.from] : rank[a.to] < rank[b.to];
  });
  std::ostringstream os;
  for (auto a : arcs) os << a.from << " -> " << a.to << '\n';
  return os.str();
}

std::optional<TransitiveOrientation> ComparabilityBackend::orientation(const Graph& g) const {
  {
    std::lock_guard lock(mutex_);
    if (last_ && last_->graph == g) return last_->orientation;
  }
  auto o = recognize_and_orient(g);
  std::lock_guard lock(mutex_);
  last_ = Entry{g, o};
  return o;
}

bool ComparabilityBackend::contains(const Graph& g) const {
  return trivially_transitive(g) || orientation(g).has_value();
}

Solution ComparabilityBackend::solve_wmc(const Graph& g) const {
  auto o = orientation(g);
  if (!o) throw CertificateError("comparability backend: graph is not a comparability graph");
  return wmc_comparability(g, *o);
}

Solution ComparabilityBackend::solve_wmis(const Graph& g) const {
  auto o = orientation(g);
  if (!o) throw CertificateError("comparability backend: graph is not a comparability graph");
  return wmis_comparability(g, *o);
}

std::optional<std::size_t> ComparabilityBackend::distance_upper_bound(const Graph& g) const {
  const auto low = std::min(g.edge_count(), g.non_edge_count());
  return low <= 4 ? 0 : low - 4;
}

}  // namespace edgedist
