#include "edgedist/min_flow.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace edgedist {

LowerBoundFlow::LowerBoundFlow(std::size_t nodes)
    : nodes_(nodes), out_(nodes + 2), excess_(nodes + 2, 0) {}

std::size_t LowerBoundFlow::add_edge(std::size_t from, std::size_t to, Capacity cap) {
  const std::size_t id = edges_.size();
  edges_.push_back({to, cap});
  edges_.push_back({from, 0});
  out_[from].push_back(id);
  out_[to].push_back(id + 1);
  return id;
}

std::size_t LowerBoundFlow::add_arc(std::size_t from, std::size_t to, Capacity lower, Capacity upper) {
  if (from >= nodes_ || to >= nodes_) throw std::out_of_range("add_arc: node out of range");
  if (lower < 0 || upper < lower) throw std::invalid_argument("add_arc: need 0 <= lower <= upper");
  if (solved_) throw std::logic_error("add_arc: network already solved");
  user_.push_back(add_edge(from, to, upper - lower));
  lower_.push_back(lower);
  excess_[to] += lower;
  excess_[from] -= lower;
  return user_.size() - 1;
}

bool LowerBoundFlow::build_levels(std::size_t s, std::size_t t) {
  level_.assign(out_.size(), -1);
  std::queue<std::size_t> q;
  level_[s] = 0;
  q.push(s);
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto id : out_[v]) {
      const auto& e = edges_[id];
      if (e.cap > 0 && level_[e.to] < 0) {
        level_[e.to] = level_[v] + 1;
        q.push(e.to);
      }
    }
  }
  return level_[t] >= 0;
}

LowerBoundFlow::Capacity LowerBoundFlow::augment(std::size_t v, std::size_t t, Capacity limit) {
  if (v == t) return limit;
  for (auto& i = cursor_[v]; i < out_[v].size(); ++i) {
    const auto id = out_[v][i];
    auto& e = edges_[id];
    if (e.cap <= 0 || level_[e.to] != level_[v] + 1) continue;
    const Capacity pushed = augment(e.to, t, std::min(limit, e.cap));
    if (pushed > 0) {
      e.cap -= pushed;
      edges_[id ^ 1].cap += pushed;
      return pushed;
    }
  }
  return 0;
}

LowerBoundFlow::Capacity LowerBoundFlow::max_flow(std::size_t s, std::size_t t) {
  Capacity total = 0;
  while (build_levels(s, t)) {
    cursor_.assign(out_.size(), 0);
    while (Capacity pushed = augment(s, t, kInfinite)) total += pushed;
  }
  return total;
}

std::optional<LowerBoundFlow::Capacity> LowerBoundFlow::min_flow(std::size_t source, std::size_t sink) {
  if (source >= nodes_ || sink >= nodes_ || source == sink) {
    throw std::invalid_argument("min_flow: bad source/sink");
  }
  if (solved_) throw std::logic_error("min_flow: already solved");
  solved_ = true;

  const std::size_t super_source = nodes_;
  const std::size_t super_sink = nodes_ + 1;
  const std::size_t back = add_edge(sink, source, kInfinite);
  std::vector<std::size_t> supply;
  Capacity required = 0;
  for (std::size_t v = 0; v < nodes_; ++v) {
    if (excess_[v] > 0) {
      supply.push_back(add_edge(super_source, v, excess_[v]));
      required += excess_[v];
    } else if (excess_[v] < 0) {
      supply.push_back(add_edge(v, super_sink, -excess_[v]));
    }
  }
  if (max_flow(super_source, super_sink) != required) return std::nullopt;

  const Capacity feasible = edges_[back ^ 1].cap;
  edges_[back].cap = edges_[back ^ 1].cap = 0;
  for (auto id : supply) edges_[id].cap = edges_[id ^ 1].cap = 0;

  return feasible - max_flow(sink, source);
}

LowerBoundFlow::Capacity LowerBoundFlow::flow(std::size_t arc) const {
  return lower_.at(arc) + edges_[user_.at(arc) ^ 1].cap;
}

std::vector<bool> LowerBoundFlow::residual_reachable(std::size_t from) const {
  std::vector<bool> seen(nodes_, false);
  std::vector<std::size_t> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto id : out_[v]) {
      const auto& e = edges_[id];
      if (e.cap > 0 && e.to < nodes_ && !seen[e.to]) {
        seen[e.to] = true;
        stack.push_back(e.to);
      }
    }
  }
  return seen;
}

}  // namespace edgedist
