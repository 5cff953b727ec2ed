#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gsample/estimators.hpp"
#include "gsample/graph.hpp"
#include "gsample/rng.hpp"

namespace gsample {

/// Choice of Q(w) for the estimator x_TOT = sum_{v in Q(U)} x(v) / pi(v),
/// pi(v) = sum_{w : v in Q(w)} p(w), with the sample taken as the i-stage
/// BFS ball B_i(U).
struct NeighborhoodScheme {
  enum class Variant { trivial, extreme, half_radius, half_radius_extended };
  Variant variant = Variant::half_radius;
  int depth = 2;                      // i >= 1
  NodeId extreme_node = 0;            // v*, extreme only
  std::vector<double> seed_probability;  // p(w); empty = uniform 1/|V|

  static NeighborhoodScheme trivial(int depth) { return {Variant::trivial, depth, 0, {}}; }
  static NeighborhoodScheme extreme(int depth, NodeId v) { return {Variant::extreme, depth, v, {}}; }
  static NeighborhoodScheme half_radius(int depth) { return {Variant::half_radius, depth, 0, {}}; }
  static NeighborhoodScheme half_radius_extended(int depth) {
    return {Variant::half_radius_extended, depth, 0, {}};
  }
};

enum class EstimatorMode {
  sample_only,  // everything is computed from B_i(seed); feasibility is checked at run time
  oracle        // pi from full knowledge of the graph
};

const char* to_string(NeighborhoodScheme::Variant v);

/// Holds the graph and scheme; in oracle mode pi is precomputed for all
/// nodes by enumerating every Q(w).
class ArbitraryTopologyEstimator {
 public:
  ArbitraryTopologyEstimator(const Graph& g, NeighborhoodScheme scheme, EstimatorMode mode);

  /// x_TOT estimate from the sample started at `seed`. `x` is per node.
  EstimationReport estimate(NodeId seed, std::span<const double> x) const;

  /// Q(w) as defined by the scheme (full graph access).
  std::vector<NodeId> neighborhood(NodeId w) const;
  /// pi(v) by definition (oracle mode only).
  double inclusion(NodeId v) const { return pi_.at(v); }
  double seed_probability(NodeId w) const;

 private:
  EstimationReport estimate_from_sample(NodeId seed, std::span<const double> x) const;

  const Graph& g_;
  NeighborhoodScheme scheme_;
  EstimatorMode mode_;
  std::vector<double> pi_;
  std::vector<std::vector<NodeId>> depth_balls_;  // B_i(v), extended variant only
};

/// One-shot convenience wrapper.
EstimationReport arbitrary_topology_estimate(const Graph& g, std::span<const double> x, NodeId seed,
                                             const NeighborhoodScheme& scheme, EstimatorMode mode);

struct ComparisonRow {
  std::string method;
  double mean_estimate = 0.0;
  double rmse = 0.0;
  std::size_t replicas = 0;
  double diag_iterations = 0.0;  // mean solver iterations (RG-based row)
  double diag_residual = 0.0;    // worst residual (RG-based row)
};

struct ComparisonSetup {
  std::vector<NeighborhoodScheme> schemes;  // estimated mean = x_TOT / |V|
  bool include_rg_based = true;             // BFS sample of |B_i(seed)| nodes fed to bfs_correct
  int rg_depth = 2;
  std::size_t replicas = 1000;
};

/// Mean estimate and RMSE against the true mean of x over uniformly seeded
/// replicas; all methods see the same seeds.
std::vector<ComparisonRow> rmse_compare(const Graph& g, std::span<const double> x, const ComparisonSetup& setup,
                                        Rng& rng);

/// CSV "method,mean_estimate,rmse,replicas,diag_iterations,diag_residual".
void write_comparison_csv(std::ostream& out, std::span<const ComparisonRow> rows);

}  // namespace gsample
