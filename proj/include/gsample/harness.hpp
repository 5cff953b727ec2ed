#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gsample/arbitrary_topology.hpp"
#include "gsample/experiment_config.hpp"
#include "gsample/graph.hpp"
#include "gsample/rng.hpp"
#include "gsample/trace.hpp"

namespace gsample {

/// Graph for one replica. Generated sources draw from
/// derive_seed(master, replica, "graph"), so a fixed (non-regenerated) graph
/// uses replica 0.
Graph build_graph(const GraphSource& source, std::uint64_t master_seed, std::size_t replica);

/// Runs one technique from `seed`. Traversals stop at `budget` nodes, walks
/// after `budget` records; "wwr" and "stub" only use the degree sequence.
SampleTrace run_technique(const Graph& g, const TechniqueSpec& technique, NodeId seed, std::size_t budget,
                          Rng& rng);

struct CurveRow {
  std::string technique;
  double f = 0.0;
  std::size_t replicas = 0;
  std::size_t reached = 0;      // replicas whose sample got to f
  double empirical_mean = 0.0;  // mean sampled degree, averaged over replicas that reached f
  double stderr_mean = 0.0;
  double analytic_mean = 0.0;   // configuration-model expectation at f
  double rw_mean = 0.0;         // <k^2>/<k>
  double true_mean = 0.0;       // <k>
  std::optional<double> target_r;
  std::optional<double> achieved_r;

  bool flagged() const noexcept { return reached < replicas; }
};

std::vector<CurveRow> run_bias_curves(const ExperimentConfig& cfg);

/// Bias curves on one fixed graph, seeds drawn per replica.
std::vector<CurveRow> bias_curves_on_graph(const Graph& g, const ExperimentConfig& cfg);

struct CorrectionRow {
  std::string technique;
  double f = 0.0;
  std::optional<std::size_t> replica;  // empty on averaged rows
  std::size_t runs = 0;
  std::size_t failures = 0;            // bfs_correct non-convergence
  double sampled_mean = 0.0;
  double bfs_corrected = 0.0;
  double rw_corrected = 0.0;
  double true_mean = 0.0;
  double iterations = 0.0;
  double residual = 0.0;
};

/// Averaged rows (one per technique and f) followed by per-run rows.
std::vector<CorrectionRow> run_correction_eval(const ExperimentConfig& cfg);

struct EstimatorComparison {
  std::string dataset;
  double true_mean = 0.0;
  ComparisonRow arbitrary;
  ComparisonRow rg_based;
};

EstimatorComparison run_estimator_comparison(const ExperimentConfig& cfg);

struct SweepResult {
  std::vector<CurveRow> rows;
  std::vector<std::string> diagnostics;  // skipped targets
};

SweepResult run_assortativity_sweep(const ExperimentConfig& cfg);

void write_curves_csv(std::ostream& out, const ExperimentConfig& cfg, const std::vector<CurveRow>& rows);
void write_correction_csv(std::ostream& out, const ExperimentConfig& cfg, const std::vector<CorrectionRow>& rows);
void write_comparison_csv(std::ostream& out, const ExperimentConfig& cfg, const EstimatorComparison& row);

}  // namespace gsample
