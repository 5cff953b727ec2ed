#include "gsample/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <mutex>
#include <ostream>
#include <thread>

#include "gsample/analytic.hpp"
#include "gsample/degree_distribution.hpp"
#include "gsample/edge_list.hpp"
#include "gsample/estimators.hpp"
#include "gsample/generate.hpp"
#include "gsample/samplers.hpp"
#include "gsample/stub_traversal.hpp"

namespace gsample {

namespace {

/// Runs body(i) for i in [0, count) on up to `workers` threads. Callers write
/// into per-index slots, so results do not depend on scheduling.
template <typename Body>
void parallel_for(std::size_t count, std::size_t workers, Body body) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::size_t nodes_for(double f, std::size_t population) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(f * static_cast<double>(population))));
}

double max_f(const std::vector<double>& grid) {
  return grid.empty() ? 0.0 : *std::max_element(grid.begin(), grid.end());
}

std::vector<double> prefix_means(const SampleTrace& trace, const std::vector<std::size_t>& cuts) {
  std::vector<double> out(cuts.size(), std::nan(""));
  long double sum = 0.0L;
  std::size_t c = 0;
  std::vector<std::size_t> order(cuts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cuts[a] < cuts[b]; });
  for (std::size_t i = 0; i < trace.size() && c < order.size(); ++i) {
    sum += trace.records[i].degree;
    while (c < order.size() && cuts[order[c]] == i + 1) {
      out[order[c]] = static_cast<double>(sum / static_cast<long double>(i + 1));
      ++c;
    }
  }
  return out;
}

struct ReplicaCurves {
  std::vector<std::vector<double>> means;  // technique x f, NaN when unreached
  std::vector<double> analytic;            // per f, NaN when f > f_max
  double rw_mean = 0.0;
  double true_mean = 0.0;
};

ReplicaCurves curves_for_replica(const Graph& g, const ExperimentConfig& cfg, std::size_t replica) {
  const std::size_t n = g.node_count();
  const auto d = degree_distribution(g);
  const auto m = moments(d);
  ReplicaCurves out;
  out.rw_mean = m.ratio;
  out.true_mean = m.mean;

  std::vector<std::size_t> cuts;
  for (double f : cfg.f_grid) {
    cuts.push_back(nodes_for(f, n));
    out.analytic.push_back(f <= max_coverage(d) ? mean_q_of_f(d, f) : std::nan(""));
  }
  const std::size_t budget = nodes_for(max_f(cfg.f_grid), n);
  for (const auto& tech : cfg.techniques) {
    Rng rng(derive_seed(cfg.seed, replica, tech.tag()));
    const auto seed = static_cast<NodeId>(uniform_below(rng, n));
    SampleTrace trace = run_technique(g, tech, seed, budget, rng);
    out.means.push_back(prefix_means(trace, cuts));
  }
  return out;
}

std::vector<CurveRow> aggregate_curves(const ExperimentConfig& cfg, const std::vector<ReplicaCurves>& reps) {
  std::vector<CurveRow> rows;
  for (std::size_t t = 0; t < cfg.techniques.size(); ++t) {
    for (std::size_t j = 0; j < cfg.f_grid.size(); ++j) {
      CurveRow row;
      row.technique = cfg.techniques[t].tag();
      row.f = cfg.f_grid[j];
      row.replicas = reps.size();
      long double sum = 0.0L, sq = 0.0L, analytic = 0.0L, rw = 0.0L, truth = 0.0L;
      std::size_t analytic_count = 0;
      for (const auto& r : reps) {
        rw += r.rw_mean;
        truth += r.true_mean;
        if (!std::isnan(r.analytic[j])) {
          analytic += r.analytic[j];
          ++analytic_count;
        }
        const double v = r.means[t][j];
        if (std::isnan(v)) continue;
        ++row.reached;
        sum += v;
        sq += static_cast<long double>(v) * v;
      }
      const auto reps_ld = static_cast<long double>(reps.size());
      row.rw_mean = static_cast<double>(rw / reps_ld);
      row.true_mean = static_cast<double>(truth / reps_ld);
      row.analytic_mean = analytic_count ? static_cast<double>(analytic / analytic_count) : std::nan("");
      if (row.reached) {
        const long double mean = sum / row.reached;
        row.empirical_mean = static_cast<double>(mean);
        if (row.reached > 1) {
          const long double var = (sq - row.reached * mean * mean) / (row.reached - 1);
          row.stderr_mean = static_cast<double>(std::sqrt(std::max(0.0L, var) / row.reached));
        }
      } else {
        row.empirical_mean = std::nan("");
      }
      rows.push_back(row);
    }
  }
  return rows;
}

void write_metadata(std::ostream& out, const ExperimentConfig& cfg, const std::string& experiment) {
  out << "# experiment=" << experiment << '\n';
  out << "# master_seed=" << cfg.seed << '\n';
  out << "# replicas=" << cfg.replicas << '\n';
  out << "# config=" << to_json(cfg).dump() << '\n';
}

std::string dataset_name(const GraphSource& source) {
  if (source.file) return std::filesystem::path(*source.file).filename().string();
  return source.pk + "@" + std::to_string(source.nodes);
}

}  // namespace

Graph build_graph(const GraphSource& source, std::uint64_t master_seed, std::size_t replica) {
  if (source.file) return load_edge_list_file(*source.file, source.load);
  const auto d = DegreeDistribution::parse(source.pk);
  Rng rng(derive_seed(master_seed, replica, "graph"));
  const auto sequence = degree_sequence_from_distribution(d, source.nodes);
  Graph g = configuration_model(sequence, rng);
  if (source.largest_component) g = largest_component(g);
  if (source.assortativity) {
    RewireOptions opts;
    opts.target = *source.assortativity;
    opts.tolerance = source.rewire_tolerance;
    g = rewire_to_assortativity(g, opts, rng).graph;
  }
  return g;
}

SampleTrace run_technique(const Graph& g, const TechniqueSpec& technique, NodeId seed, std::size_t budget,
                          Rng& rng) {
  const auto& name = technique.name;
  const std::size_t cap = std::min(budget, g.node_count());
  if (name == "bfs") return bfs(g, seed, cap);
  if (name == "dfs") return dfs(g, seed, cap);
  if (name == "ff") return forest_fire(g, seed, cap, technique.burn_p, rng);
  if (name == "sbs") return snowball(g, seed, cap, technique.names, rng);
  if (name == "rw") return random_walk(g, seed, budget, rng);
  if (name == "mhrw") return mhrw(g, seed, budget, rng);
  if (name == "wwr") return weighted_trace(g, cap, rng);
  if (name == "stub") {
    const auto sequence = g.degrees();
    const auto indices = assign_stub_indices(sequence, rng);
    // The index scan picks its own start; `seed` is not used.
    auto result = stub_level_traversal(sequence, indices, first_in_scan(indices), QueueDiscipline::fifo(), cap,
                                       nullptr, StubRestart::next_smallest);
    return std::move(result.trace);
  }
  throw ConfigError("unknown technique '" + name + "'");
}

std::vector<CurveRow> run_bias_curves(const ExperimentConfig& cfg) {
  cfg.validate();
  if (!cfg.graph.generated() || !cfg.graph.regenerate_per_replica) {
    return bias_curves_on_graph(build_graph(cfg.graph, cfg.seed, 0), cfg);
  }
  std::vector<ReplicaCurves> reps(cfg.replicas);
  parallel_for(cfg.replicas, cfg.workers, [&](std::size_t r) {
    reps[r] = curves_for_replica(build_graph(cfg.graph, cfg.seed, r), cfg, r);
  });
  return aggregate_curves(cfg, reps);
}

std::vector<CurveRow> bias_curves_on_graph(const Graph& g, const ExperimentConfig& cfg) {
  std::vector<ReplicaCurves> reps(cfg.replicas);
  parallel_for(cfg.replicas, cfg.workers, [&](std::size_t r) { reps[r] = curves_for_replica(g, cfg, r); });
  return aggregate_curves(cfg, reps);
}

std::vector<CorrectionRow> run_correction_eval(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<const TechniqueSpec*> traversals;
  for (const auto& t : cfg.techniques)
    if (!t.is_walk()) traversals.push_back(&t);

  const bool shared = !cfg.graph.generated() || !cfg.graph.regenerate_per_replica;
  std::optional<Graph> shared_graph;
  if (shared) shared_graph = build_graph(cfg.graph, cfg.seed, 0);

  // per replica: technique x f
  std::vector<std::vector<CorrectionRow>> per_run(cfg.replicas);
  parallel_for(cfg.replicas, cfg.workers, [&](std::size_t r) {
    std::optional<Graph> own;
    if (!shared) own = build_graph(cfg.graph, cfg.seed, r);
    const Graph& g = shared ? *shared_graph : *own;
    const std::size_t n = g.node_count();
    const double truth = moments(degree_distribution(g)).mean;
    for (const auto* tech : traversals) {
      Rng rng(derive_seed(cfg.seed, r, tech->tag()));
      const auto seed = static_cast<NodeId>(uniform_below(rng, n));
      const SampleTrace full = run_technique(g, *tech, seed, nodes_for(max_f(cfg.f_grid), n), rng);
      for (double f : cfg.f_grid) {
        CorrectionRow row;
        row.technique = tech->tag();
        row.f = f;
        row.replica = r;
        row.runs = 1;
        row.true_mean = truth;
        const std::size_t m = nodes_for(f, n);
        if (full.size() < m) {
          row.failures = 1;
          row.sampled_mean = row.bfs_corrected = row.rw_corrected = std::nan("");
          per_run[r].push_back(row);
          continue;
        }
        SampleTrace prefix = full;
        prefix.records.resize(m);
        prefix.set_population(n);
        row.sampled_mean = *mhrw_correct(prefix).mean_degree;
        row.rw_corrected = *rw_correct(prefix).mean_degree;
        try {
          const auto report = bfs_correct(prefix, prefix.coverage);
          row.bfs_corrected = *report.mean_degree;
          row.iterations = static_cast<double>(report.diagnostics.iterations);
          row.residual = report.diagnostics.residual;
        } catch (const ConvergenceError& e) {
          row.failures = 1;
          row.bfs_corrected = std::nan("");
          row.iterations = static_cast<double>(e.iterations());
          row.residual = e.best_residual();
        }
        per_run[r].push_back(row);
      }
    }
  });

  std::vector<CorrectionRow> rows;
  const std::size_t per_replica = traversals.size() * cfg.f_grid.size();
  for (std::size_t j = 0; j < per_replica; ++j) {
    CorrectionRow avg = per_run.front()[j];
    avg.replica.reset();
    avg.runs = 0;
    avg.failures = 0;
    long double s = 0, b = 0, w = 0, truth = 0, it = 0;
    double worst = 0.0;
    std::size_t ok = 0;
    for (const auto& rep : per_run) {
      const auto& row = rep[j];
      ++avg.runs;
      truth += row.true_mean;
      if (row.failures) {
        ++avg.failures;
        continue;
      }
      ++ok;
      s += row.sampled_mean;
      b += row.bfs_corrected;
      w += row.rw_corrected;
      it += row.iterations;
      worst = std::max(worst, row.residual);
    }
    avg.true_mean = static_cast<double>(truth / avg.runs);
    avg.sampled_mean = ok ? static_cast<double>(s / ok) : std::nan("");
    avg.bfs_corrected = ok ? static_cast<double>(b / ok) : std::nan("");
    avg.rw_corrected = ok ? static_cast<double>(w / ok) : std::nan("");
    avg.iterations = ok ? static_cast<double>(it / ok) : 0.0;
    avg.residual = worst;
    rows.push_back(avg);
  }
  for (const auto& rep : per_run) rows.insert(rows.end(), rep.begin(), rep.end());
  return rows;
}

EstimatorComparison run_estimator_comparison(const ExperimentConfig& cfg) {
  cfg.validate();
  const Graph g = build_graph(cfg.graph, cfg.seed, 0);
  std::vector<double> x;
  x.reserve(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) x.push_back(g.degree(v));

  ComparisonSetup setup;
  setup.schemes = {NeighborhoodScheme::half_radius(cfg.depth)};
  setup.rg_depth = cfg.depth;
  setup.replicas = cfg.replicas;
  Rng rng(derive_seed(cfg.seed, 0, "compare"));
  auto rows = rmse_compare(g, x, setup, rng);

  EstimatorComparison out;
  out.dataset = dataset_name(cfg.graph);
  out.true_mean = moments(degree_distribution(g)).mean;
  out.arbitrary = rows.at(0);
  out.rg_based = rows.at(1);
  return out;
}

SweepResult run_assortativity_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  SweepResult result;
  GraphSource base_source = cfg.graph;
  base_source.assortativity.reset();
  const Graph base = build_graph(base_source, cfg.seed, 0);
  for (std::size_t i = 0; i < cfg.assortativity_targets.size(); ++i) {
    const double target = cfg.assortativity_targets[i];
    RewireOptions opts;
    opts.target = target;
    opts.tolerance = cfg.graph.rewire_tolerance;
    Rng rng(derive_seed(cfg.seed, i, "rewire"));
    RewireResult rewired;
    try {
      rewired = rewire_to_assortativity(base, opts, rng);
    } catch (const std::exception& e) {
      result.diagnostics.push_back("target " + std::to_string(target) + ": " + e.what());
      continue;
    }
    if (!rewired.converged) {
      result.diagnostics.push_back("target " + std::to_string(target) + ": reached only r=" +
                                   std::to_string(rewired.achieved_r));
      continue;
    }
    auto rows = bias_curves_on_graph(rewired.graph, cfg);
    for (auto& row : rows) {
      row.target_r = target;
      row.achieved_r = rewired.achieved_r;
    }
    result.rows.insert(result.rows.end(), rows.begin(), rows.end());
  }
  return result;
}

void write_curves_csv(std::ostream& out, const ExperimentConfig& cfg, const std::vector<CurveRow>& rows) {
  write_metadata(out, cfg, "bias_curves");
  out.precision(10);
  out << "technique,f,replicas,reached,empirical_mean,stderr,analytic_mean,rw_mean,true_mean,target_r,achieved_r,"
         "flag,master_seed\n";
  for (const auto& r : rows) {
    out << r.technique << ',' << r.f << ',' << r.replicas << ',' << r.reached << ',' << r.empirical_mean << ','
        << r.stderr_mean << ',' << r.analytic_mean << ',' << r.rw_mean << ',' << r.true_mean << ',';
    if (r.target_r) out << *r.target_r;
    out << ',';
    if (r.achieved_r) out << *r.achieved_r;
    out << ',' << (r.flagged() ? "unreachable" : "") << ',' << cfg.seed << '\n';
  }
}

void write_correction_csv(std::ostream& out, const ExperimentConfig& cfg, const std::vector<CorrectionRow>& rows) {
  write_metadata(out, cfg, "correction_eval");
  out.precision(10);
  out << "technique,f,replica,runs,failures,sampled_mean,bfs_corrected,rw_corrected,true_mean,diag_iterations,"
         "diag_residual,master_seed\n";
  for (const auto& r : rows) {
    out << r.technique << ',' << r.f << ',';
    if (r.replica) out << *r.replica;
    else out << "all";
    out << ',' << r.runs << ',' << r.failures << ',' << r.sampled_mean << ',' << r.bfs_corrected << ','
        << r.rw_corrected << ',' << r.true_mean << ',' << r.iterations << ',' << r.residual << ',' << cfg.seed
        << '\n';
  }
}

void write_comparison_csv(std::ostream& out, const ExperimentConfig& cfg, const EstimatorComparison& row) {
  write_metadata(out, cfg, "compare");
  out.precision(10);
  out << "dataset,true_mean,method,mean_estimate,rmse,replicas,diag_iterations,diag_residual\n";
  for (const auto* r : {&row.arbitrary, &row.rg_based})
    out << row.dataset << ',' << row.true_mean << ',' << r->method << ',' << r->mean_estimate << ',' << r->rmse
        << ',' << r->replicas << ',' << r->diag_iterations << ',' << r->diag_residual << '\n';
}

}  // namespace gsample
