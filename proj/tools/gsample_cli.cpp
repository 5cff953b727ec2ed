// gsample: command-line front end for the sampling library.
//
//   gsample stats <edgelist>
//   gsample generate --pk <spec> --nodes N [--assortativity r]
//   gsample sample --technique bfs --seed-node S --budget B (--graph FILE | --pk SPEC --nodes N)
//   gsample curves --config c.json
//   gsample correct --trace t.csv --f F [--max-iterations N]
//   gsample compare --config c.json
//   gsample evaluate --config c.json
//   gsample sweep --config c.json
//   gsample analytic --pk SPEC [--points K]
//
// Exit codes: 0 success, 2 bad input or configuration, 3 estimator did not converge.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "gsample/analytic.hpp"
#include "gsample/degree_distribution.hpp"
#include "gsample/edge_list.hpp"
#include "gsample/estimators.hpp"
#include "gsample/experiment_config.hpp"
#include "gsample/generate.hpp"
#include "gsample/graph_stats.hpp"
#include "gsample/harness.hpp"
#include "gsample/trace.hpp"

using namespace gsample;

namespace {

struct Globals {
  std::optional<std::uint64_t> rng_seed;
  std::optional<std::size_t> replicas;
  std::string out_dir;
};

/// Output goes to DIR/name when --out is set, to stdout otherwise.
class Sink {
 public:
  Sink(const Globals& g, const std::string& name) {
    if (g.out_dir.empty()) return;
    std::filesystem::create_directories(g.out_dir);
    path_ = (std::filesystem::path(g.out_dir) / name).string();
    file_ = std::make_unique<std::ofstream>(path_);
    if (!*file_) throw ConfigError("cannot write '" + path_ + "'");
  }
  ~Sink() {
    if (file_) std::cerr << "wrote " << path_ << '\n';
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
};

ExperimentConfig config_with_overrides(const std::string& path, const Globals& g) {
  ExperimentConfig cfg = load_config(path);
  if (g.rng_seed) cfg.seed = *g.rng_seed;
  if (g.replicas) cfg.replicas = *g.replicas;
  if (!g.out_dir.empty()) cfg.output_dir = g.out_dir;
  cfg.validate();
  return cfg;
}

Graph generated_graph(const std::string& pk, std::size_t nodes, std::optional<double> r, std::uint64_t seed,
                      bool lcc) {
  GraphSource source;
  source.pk = pk;
  source.nodes = nodes;
  source.assortativity = r;
  source.largest_component = lcc;
  ExperimentConfig probe;
  probe.graph = source;
  probe.validate();
  return build_graph(source, seed, 0);
}

void print_stats(std::ostream& out, const Graph& g) {
  const auto s = summarize(g);
  out.precision(10);
  out << "nodes,edges,mean_degree,k2_over_k,assortativity\n";
  out << s.nodes << ',' << s.edges << ',' << s.mean_degree << ',' << s.k2_over_k << ',';
  if (s.assortativity) out << *s.assortativity;
  else out << "undefined";
  out << '\n';
}

void write_report(std::ostream& out, const SampleTrace& trace, const EstimationReport& r) {
  out.precision(10);
  out << "# technique=" << trace.technique << '\n';
  out << "# records=" << trace.size() << '\n';
  out << "method,estimate,mean_degree,diag_iterations,diag_t,diag_residual\n";
  out << r.technique << ',' << r.value << ',' << (r.mean_degree ? *r.mean_degree : r.value) << ','
      << r.diagnostics.iterations << ',' << r.diagnostics.t << ',' << r.diagnostics.residual << '\n';
  if (r.distribution) {
    out << "k,p_hat\n";
    for (auto [k, p] : *r.distribution) out << k << ',' << p << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph sampling, degree-bias analysis and correction"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Globals globals;
  app.add_option("--rng-seed", globals.rng_seed, "Master random seed");
  app.add_option("--replicas", globals.replicas, "Replica count (overrides the config)")->check(CLI::PositiveNumber);
  app.add_option("--out", globals.out_dir, "Output directory (default: stdout)");

  std::string edge_file;
  auto* stats = app.add_subcommand("stats", "Summary statistics of an edge list");
  stats->add_option("edgelist", edge_file)->required();

  std::string pk = "powerlaw:2.5:1:100";
  std::size_t nodes = 10000;
  std::optional<double> assort;
  bool keep_all = false;
  auto* gen = app.add_subcommand("generate", "Draw a configuration-model graph");
  gen->add_option("--pk", pk, "Degree distribution spec");
  gen->add_option("--nodes", nodes)->check(CLI::PositiveNumber);
  gen->add_option("--assortativity", assort, "Rewire to this target r");
  gen->add_flag("--all-components", keep_all, "Keep every component");

  std::string technique;
  std::uint32_t seed_node = 0;
  std::size_t budget = 0;
  double burn_p = 0.7;
  std::size_t names = 3;
  auto* sample = app.add_subcommand("sample", "Sample a graph and write the trace");
  sample->add_option("--technique", technique)
      ->required()
      ->check(CLI::IsMember({"bfs", "dfs", "ff", "sbs", "rw", "mhrw", "wwr", "stub"}));
  sample->add_option("--seed-node", seed_node)->required();
  sample->add_option("--budget", budget, "Nodes for traversals, steps for walks")->required();
  auto* graph_opt = sample->add_option("--graph", edge_file, "Edge list to sample");
  sample->add_option("--pk", pk, "Generate instead of loading")->excludes(graph_opt);
  sample->add_option("--nodes", nodes)->check(CLI::PositiveNumber);
  sample->add_option("--p", burn_p, "Forest fire burn probability");
  sample->add_option("--n", names, "Snowball names");

  std::string config_path;
  auto* curves = app.add_subcommand("curves", "Mean sampled degree against coverage");
  curves->add_option("--config", config_path)->required();
  auto* compare = app.add_subcommand("compare", "RMSE of the half-radius and RG-based estimators");
  compare->add_option("--config", config_path)->required();
  auto* evaluate = app.add_subcommand("evaluate", "Bias correction over replicas");
  evaluate->add_option("--config", config_path)->required();
  auto* sweep = app.add_subcommand("sweep", "Bias curves across assortativity targets");
  sweep->add_option("--config", config_path)->required();

  std::string trace_path;
  std::optional<double> f_real;
  auto* correct = app.add_subcommand("correct", "Correct the degree bias of a trace");
  correct->add_option("--trace", trace_path)->required();
  correct->add_option("--f", f_real, "Coverage fraction (traversal traces)");
  BfsCorrectOptions solver;
  correct->add_option("--tolerance", solver.tolerance, "Residual tolerance of the traversal solver");
  correct->add_option("--max-iterations", solver.max_iterations)->check(CLI::PositiveNumber);

  std::size_t points = 100;
  auto* analytic = app.add_subcommand("analytic", "Expected traversal bias curve");
  analytic->add_option("--pk", pk)->required();
  analytic->add_option("--points", points)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::uint64_t seed = globals.rng_seed.value_or(1);
  try {
    if (*stats) {
      Sink sink(globals, "stats.csv");
      print_stats(sink.stream(), load_edge_list_file(edge_file));
    } else if (*gen) {
      Sink sink(globals, "graph.txt");
      write_edge_list(sink.stream(), generated_graph(pk, nodes, assort, seed, !keep_all));
    } else if (*sample) {
      const Graph g = edge_file.empty() ? generated_graph(pk, nodes, std::nullopt, seed, true)
                                        : load_edge_list_file(edge_file);
      if (!g.contains(seed_node)) throw ConfigError("seed node out of range");
      TechniqueSpec spec{technique, burn_p, names};
      ExperimentConfig probe;
      probe.techniques = {spec};
      probe.validate();
      Rng rng(derive_seed(seed, 0, spec.tag()));
      SampleTrace trace = run_technique(g, spec, seed_node, budget, rng);
      trace.rng_seed = seed;
      Sink sink(globals, "trace.csv");
      write_trace_csv(sink.stream(), trace);
    } else if (*curves) {
      const auto cfg = config_with_overrides(config_path, globals);
      const auto rows = run_bias_curves(cfg);
      Sink sink(globals, "curves.csv");
      write_curves_csv(sink.stream(), cfg, rows);
    } else if (*evaluate) {
      const auto cfg = config_with_overrides(config_path, globals);
      const auto rows = run_correction_eval(cfg);
      Sink sink(globals, "correction.csv");
      write_correction_csv(sink.stream(), cfg, rows);
    } else if (*compare) {
      const auto cfg = config_with_overrides(config_path, globals);
      const auto row = run_estimator_comparison(cfg);
      Sink sink(globals, "compare.csv");
      write_comparison_csv(sink.stream(), cfg, row);
    } else if (*sweep) {
      const auto cfg = config_with_overrides(config_path, globals);
      const auto result = run_assortativity_sweep(cfg);
      for (const auto& d : result.diagnostics) std::cerr << "skipped " << d << '\n';
      Sink sink(globals, "sweep.csv");
      write_curves_csv(sink.stream(), cfg, result.rows);
    } else if (*correct) {
      std::ifstream in(trace_path);
      if (!in) throw ConfigError("cannot open trace '" + trace_path + "'");
      const SampleTrace trace = read_trace_csv(in);
      EstimationReport report;
      if (trace.technique == "rw") {
        report = rw_correct(trace);
      } else if (trace.technique == "mhrw") {
        report = mhrw_correct(trace);
      } else {
        const double f = f_real.value_or(trace.coverage);
        if (!(f > 0.0 && f <= 1.0)) throw ConfigError("traversal correction needs --f in (0,1]");
        report = bfs_correct(trace, f, {}, solver);
      }
      Sink sink(globals, "correction.csv");
      write_report(sink.stream(), trace, report);
    } else if (*analytic) {
      const auto d = DegreeDistribution::parse(pk);
      std::vector<double> grid;
      const double top = max_coverage(d);
      for (std::size_t i = 1; i <= points; ++i) grid.push_back(top * static_cast<double>(i) / points);
      Sink sink(globals, "analytic.csv");
      write_curve_csv(sink.stream(), d, grid);
    }
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << " (best residual " << e.best_residual() << " after " << e.iterations()
              << " iterations)\n";
    return 3;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
