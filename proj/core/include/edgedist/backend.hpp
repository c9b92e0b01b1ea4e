#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "edgedist/graph.hpp"

namespace edgedist {

/// A distant-edge set or class-membership certificate did not hold.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A hereditary graph class together with exact WMCP/WMISP solvers for its members.
///
/// Implementations must be re-entrant: the solver may call them from several
/// threads at once. `solve_wmc`/`solve_wmis` may throw CertificateError when
/// handed a non-member.
class ClassBackend {
 public:
  virtual ~ClassBackend() = default;

  [[nodiscard]] virtual std::string name() const = 0;
  [[nodiscard]] virtual bool contains(const Graph& g) const = 0;
  [[nodiscard]] virtual Solution solve_wmc(const Graph& g) const = 0;
  [[nodiscard]] virtual Solution solve_wmis(const Graph& g) const = 0;

  /// Known upper bound on the edge distance of `g` to this class, if the class provides one.
  [[nodiscard]] virtual std::optional<std::size_t> distance_upper_bound(const Graph&) const {
    return std::nullopt;
  }
};

/// The complement class: g is a member iff complement(g) is a member of `inner`.
/// Cliques of g are independent sets of its complement and vice versa.
class ComplementBackend final : public ClassBackend {
 public:
  explicit ComplementBackend(const ClassBackend& inner) : inner_(inner) {}

  [[nodiscard]] std::string name() const override { return "co-" + inner_.name(); }
  [[nodiscard]] bool contains(const Graph& g) const override { return inner_.contains(complement(g)); }
  [[nodiscard]] Solution solve_wmc(const Graph& g) const override {
    auto s = inner_.solve_wmis(complement(g));
    s.kind = SolutionKind::Clique;
    return s;
  }
  [[nodiscard]] Solution solve_wmis(const Graph& g) const override {
    auto s = inner_.solve_wmc(complement(g));
    s.kind = SolutionKind::IndependentSet;
    return s;
  }
  [[nodiscard]] std::optional<std::size_t> distance_upper_bound(const Graph& g) const override {
    return inner_.distance_upper_bound(complement(g));
  }

 private:
  const ClassBackend& inner_;
};

}  // namespace edgedist
