#pragma once

#include <optional>
#include <span>
#include <string>

#include "gsample/degree_distribution.hpp"
#include "gsample/trace.hpp"

namespace gsample {

struct SolverDiagnostics {
  std::size_t iterations = 0;
  double t = 0.0;
  double residual = 0.0;  // |f(p_hat, t) - f_real|
};

struct EstimationReport {
  std::string technique;
  /// Estimated mean of x (x defaults to the degree), or x_TOT for the
  /// arbitrary-topology family.
  double value = 0.0;
  /// Corrected degree distribution p_hat_k and its mean, when the method yields one.
  std::optional<DegreeDistribution> distribution;
  std::optional<double> mean_degree;
  SolverDiagnostics diagnostics;
};

/// q_hat_k: share of trace records with degree k (walk revisits counted).
DegreeDistribution empirical_q(const SampleTrace& trace);

/// Hansen-Hurwitz ratio estimator for random walks: sum(x/k) / sum(1/k).
/// `x` is per record; empty means x = degree. Throws on a zero degree.
EstimationReport rw_correct(const SampleTrace& trace, std::span<const double> x = {});

/// Metropolis-Hastings walks are uniform: plain means, p_hat = q_hat.
EstimationReport mhrw_correct(const SampleTrace& trace, std::span<const double> x = {});

/// Horvitz-Thompson reweighting of q_hat by 1 / (1 - (1-t)^k), normalized.
DegreeDistribution bfs_correct_at_t(const DegreeDistribution& qhat, double t);

struct BfsCorrectOptions {
  double tolerance = 1e-8;
  std::size_t max_iterations = 500;
};

/// Traversal correction. Solves f(p_hat(t), t) = f_real for t by bisection on
/// a verified sign-change bracket (falling back to damped fixed-point
/// iteration), then returns p_hat(t*), its mean and the self-normalized
/// Horvitz-Thompson estimate of mean x with weights 1 - (1-t*)^k_v.
/// Throws ConvergenceError if the residual stays above tolerance.
EstimationReport bfs_correct(const SampleTrace& trace, double f_real, std::span<const double> x = {},
                             const BfsCorrectOptions& options = {});

}  // namespace gsample
