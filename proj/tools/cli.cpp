#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>

#include "edgedist/comparability.hpp"
#include "edgedist/distance.hpp"
#include "edgedist/generator.hpp"
#include "edgedist/graph_io.hpp"
#include "edgedist/oracle.hpp"
#include "edgedist/solver.hpp"

namespace edgedist::cli {

namespace {

using Json = nlohmann::ordered_json;

class Stopwatch {
 public:
  [[nodiscard]] double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json timing(bool enabled, double ms) { return enabled ? Json(ms) : Json(nullptr); }

Json pairs_json(const std::vector<VertexPair>& pairs) {
  Json arr = Json::array();
  for (auto p : pairs) arr.push_back({p.u, p.v});
  return arr;
}

std::unique_ptr<ClassBackend> make_backend(const std::string& name) {
  if (name == "comparability") return std::make_unique<ComparabilityBackend>();
  return nullptr;
}

struct SolveArgs {
  std::string graph;
  std::string problem;
  std::string klass = "comparability";
  std::string set;
  bool search = false;
  std::size_t kmax = 8;
  bool verify = false;
  unsigned threads = 1;
  bool json = false;
  bool no_timing = false;
};

struct RecognizeArgs {
  std::string graph;
  std::string emit_orientation;
};

struct DistanceArgs {
  std::string graph;
  std::string klass = "comparability";
  std::size_t kmax = 8;
  bool no_timing = false;
};

struct GenArgs {
  std::size_t n = 0;
  std::size_t k = 0;
  double density = 0.5;
  std::uint64_t seed = 0;
  Weight max_weight = 100;
  std::string mode;
  std::string set_out;
};

struct BenchArgs {
  std::size_t n = 0;
  std::size_t kmax = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double density = 0.5;
  std::string problem = "clique";
  unsigned threads = 1;
  bool no_timing = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  auto backend = make_backend(a.klass);
  if (!backend) {
    err << "solve: unknown class '" << a.klass << "'\n";
    return kParseError;
  }
  if (a.set.empty() == !a.search) {
    err << "solve: give exactly one of --set FILE or --search\n";
    return kParseError;
  }
  Graph g;
  std::optional<DistantEdgeSet> set;
  try {
    g = read_graph_file(a.graph);
    if (!a.set.empty()) set = read_distant_edge_set_file(a.set);
  } catch (const ParseError& e) {
    err << "solve: " << e.what() << '\n';
    return kParseError;
  }

  Stopwatch clock;
  if (a.search) {
    auto found = find_distance(g, *backend, a.kmax);
    if (auto* over = std::get_if<ExceedsKMax>(&found)) {
      err << "solve: no distant-edge set of size <= " << over->k_max << '\n';
      return kBudgetExceeded;
    }
    set = std::get<DistanceReport>(found).witness;
  }

  const auto kind = a.problem == "clique" ? SolutionKind::Clique : SolutionKind::IndependentSet;
  SolveResult result;
  try {
    const SolverOptions options{std::max(1U, a.threads)};
    result = kind == SolutionKind::Clique ? wmc_k(g, *set, *backend, options) : wmis_k(g, *set, *backend, options);
  } catch (const PreconditionError& e) {
    err << "solve: invalid distant-edge set: " << e.what() << '\n';
    return kCertificateError;
  } catch (const CertificateError& e) {
    err << "solve: " << e.what() << '\n';
    return kCertificateError;
  }
  const double ms = clock.elapsed_ms();

  Json verified = nullptr;
  if (a.verify && g.order() <= oracle::kMaxSubsetVertices) {
    const auto truth = kind == SolutionKind::Clique ? oracle::brute_wmc(g) : oracle::brute_wmis(g);
    verified = truth.weight == result.solution.weight && is_certified(g, result.solution);
  }

  Json j;
  j["problem"] = a.problem;
  j["class"] = a.klass;
  j["n"] = g.order();
  j["m"] = g.edge_count();
  j["k"] = set->k();
  j["mode"] = to_string(set->mode);
  j["vertices"] = result.solution.vertices;
  j["weight"] = result.solution.weight;
  j["leaf_calls"] = result.leaf_calls;
  j["max_depth"] = result.max_depth;
  j["runtime_ms"] = timing(!a.no_timing, ms);
  j["verified"] = verified;
  out << j.dump() << '\n';
  return kOk;
}

int cmd_recognize(const RecognizeArgs& a, std::ostream& out, std::ostream& err) {
  Graph g;
  try {
    g = read_graph_file(a.graph);
  } catch (const ParseError& e) {
    err << "recognize: " << e.what() << '\n';
    return kParseError;
  }
  const auto o = recognize_and_orient(g);
  Json j;
  j["is_comparability"] = o.has_value();
  j["n"] = g.order();
  j["m"] = g.edge_count();
  if (o) {
    const auto dump = orientation_dump(*o);
    Json arcs = Json::array();
    std::istringstream lines(dump);
    for (Vertex u, v; lines >> u;) {
      std::string arrow;
      lines >> arrow >> v;
      arcs.push_back({u, v});
    }
    j["orientation"] = std::move(arcs);
    if (!a.emit_orientation.empty()) {
      std::ofstream file(a.emit_orientation, std::ios::binary);
      if (!file) {
        err << "recognize: cannot write '" << a.emit_orientation << "'\n";
        return kParseError;
      }
      file << dump;
    }
  }
  out << j.dump() << '\n';
  return o ? kOk : kNotInClass;
}

int cmd_distance(const DistanceArgs& a, std::ostream& out, std::ostream& err) {
  auto backend = make_backend(a.klass);
  if (!backend) {
    err << "distance: unknown class '" << a.klass << "'\n";
    return kParseError;
  }
  Graph g;
  try {
    g = read_graph_file(a.graph);
  } catch (const ParseError& e) {
    err << "distance: " << e.what() << '\n';
    return kParseError;
  }
  Stopwatch clock;
  auto found = find_distance(g, *backend, a.kmax);
  const double ms = clock.elapsed_ms();
  Json j;
  if (const auto* report = std::get_if<DistanceReport>(&found)) {
    j["xi"] = report->xi;
    j["mode"] = to_string(report->witness.mode);
    j["pairs"] = pairs_json(report->witness.pairs);
    j["memberships_tested"] = report->memberships_tested;
    j["runtime_ms"] = timing(!a.no_timing, ms);
    out << j.dump() << '\n';
    return kOk;
  }
  const auto& over = std::get<ExceedsKMax>(found);
  j["xi"] = nullptr;
  j["exceeds_kmax"] = over.k_max;
  j["memberships_tested"] = over.memberships_tested;
  j["runtime_ms"] = timing(!a.no_timing, ms);
  out << j.dump() << '\n';
  return kBudgetExceeded;
}

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  GeneratorOptions options;
  options.n = a.n;
  options.k = a.k;
  options.density = a.density;
  options.seed = a.seed;
  options.max_weight = a.max_weight;
  if (!a.mode.empty()) options.mode = a.mode == "apex" ? EditMode::Apex : EditMode::Add;
  try {
    const auto instance = generate_instance(options);
    out << serialize_instance(instance, options);
    if (!a.set_out.empty()) {
      std::ofstream file(a.set_out, std::ios::binary);
      if (!file) {
        err << "gen: cannot write '" << a.set_out << "'\n";
        return kParseError;
      }
      file << serialize_distant_edge_set(instance.certificate);
    }
  } catch (const PreconditionError& e) {
    err << "gen: " << e.what() << '\n';
    return kParseError;
  }
  return kOk;
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  const ComparabilityBackend backend;
  const auto kind = a.problem == "clique" ? SolutionKind::Clique : SolutionKind::IndependentSet;
  out << "k,trial,n,m,mode,leaf_calls,max_depth,runtime_ms,oracle_match\n";
  for (std::size_t k = 0; k <= a.kmax; ++k) {
    for (std::size_t trial = 0; trial < a.trials; ++trial) {
      GeneratorOptions options;
      options.n = a.n;
      options.k = k;
      options.density = a.density;
      // Seeds depend on the trial only, so a trial's instances are nested in k.
      options.seed = a.seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
      GeneratedInstance instance;
      try {
        instance = generate_instance(options);
      } catch (const PreconditionError& e) {
        err << "bench: " << e.what() << '\n';
        return kParseError;
      }
      Stopwatch clock;
      const SolverOptions solver{std::max(1U, a.threads)};
      const auto result = kind == SolutionKind::Clique ? wmc_k(instance.graph, instance.certificate, backend, solver)
                                                       : wmis_k(instance.graph, instance.certificate, backend, solver);
      const double ms = clock.elapsed_ms();
      if (result.leaf_calls > (std::uint64_t{1} << k)) {
        err << "bench: leaf calls " << result.leaf_calls << " exceed 2^" << k << '\n';
        return kCertificateError;
      }
      std::string match = "NA";
      if (instance.graph.order() <= oracle::kMaxSubsetVertices) {
        const auto truth = kind == SolutionKind::Clique ? oracle::brute_wmc(instance.graph)
                                                        : oracle::brute_wmis(instance.graph);
        match = truth.weight == result.solution.weight ? "1" : "0";
      }
      std::ostringstream runtime;
      if (a.no_timing) {
        runtime << "NA";
      } else {
        runtime.setf(std::ios::fixed);
        runtime.precision(3);
        runtime << ms;
      }
      out << k << ',' << trial << ',' << instance.graph.order() << ',' << instance.graph.edge_count() << ','
          << to_string(instance.certificate.mode) << ',' << result.leaf_calls << ',' << result.max_depth << ','
          << runtime.str() << ',' << match << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted clique / independent set on graphs a few edge edits away from a hereditary class"};
  app.name("edgedist");
  app.require_subcommand(1);
  const std::vector<std::string> problems{"clique", "is"};

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve WMCP or WMISP given or searching for a distant-edge set");
  s->add_option("--graph", solve.graph, "Graph file")->required();
  s->add_option("--problem", solve.problem, "clique | is")->required()->check(CLI::IsMember(problems));
  s->add_option("--class", solve.klass, "Target class")->capture_default_str();
  auto* set_opt = s->add_option("--set", solve.set, "Distant-edge set file");
  auto* search_opt = s->add_flag("--search", solve.search, "Find a minimum distant-edge set first");
  set_opt->excludes(search_opt);
  s->add_option("--kmax", solve.kmax, "Search budget for --search")->capture_default_str();
  s->add_flag("--verify", solve.verify, "Compare against the brute-force oracle (n <= 24)");
  s->add_option("--threads", solve.threads, "Concurrent branches")->capture_default_str();
  s->add_flag("--json", solve.json, "JSON output (the default and only format)");
  s->add_flag("--no-timing", solve.no_timing, "Report runtime_ms as null");

  RecognizeArgs recognize;
  auto* r = app.add_subcommand("recognize", "Test for a comparability graph and orient it");
  r->add_option("--graph", recognize.graph, "Graph file")->required();
  r->add_option("--emit-orientation", recognize.emit_orientation, "Write 'u -> v' lines to FILE");

  DistanceArgs distance;
  auto* d = app.add_subcommand("distance", "Compute the edge distance and a certifying set");
  d->add_option("--graph", distance.graph, "Graph file")->required();
  d->add_option("--class", distance.klass, "Target class")->capture_default_str();
  d->add_option("--kmax", distance.kmax, "Largest distance to try")->capture_default_str();
  d->add_flag("--no-timing", distance.no_timing, "Report runtime_ms as null");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a comparability graph with k edge flips");
  g->add_option("--n", gen.n, "Vertex count")->required();
  g->add_option("--k", gen.k, "Number of flips")->required();
  g->add_option("--density", gen.density, "Relation density in [0, 1]")->required()->check(CLI::Range(0.0, 1.0));
  g->add_option("--seed", gen.seed, "RNG seed")->required();
  g->add_option("--max-weight", gen.max_weight, "Weights drawn from [0, max]")->capture_default_str();
  g->add_option("--mode", gen.mode, "Certificate mode (apex | add); random per instance when omitted")
      ->check(CLI::IsMember({"apex", "add"}));
  g->add_option("--set-out", gen.set_out, "Also write the certificate to FILE");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "CSV of leaf calls and runtime against k");
  b->add_option("--n", bench.n, "Vertex count")->required();
  b->add_option("--kmax", bench.kmax, "Largest k")->required();
  b->add_option("--trials", bench.trials, "Instances per k")->required();
  b->add_option("--seed", bench.seed, "RNG seed")->required();
  b->add_option("--density", bench.density, "Relation density")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  b->add_option("--problem", bench.problem, "clique | is")->capture_default_str()->check(CLI::IsMember(problems));
  b->add_option("--threads", bench.threads, "Concurrent branches")->capture_default_str();
  b->add_flag("--no-timing", bench.no_timing, "Write NA instead of runtimes");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  if (s->parsed()) return cmd_solve(solve, out, err);
  if (r->parsed()) return cmd_recognize(recognize, out, err);
  if (d->parsed()) return cmd_distance(distance, out, err);
  if (g->parsed()) return cmd_gen(gen, out, err);
  return cmd_bench(bench, out, err);
}

}  // namespace edgedist::cli
