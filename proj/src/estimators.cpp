#include "gsample/estimators.hpp"

#include <cmath>
#include <stdexcept>

#include "gsample/analytic.hpp"
#include "gsample/types.hpp"

namespace gsample {

namespace {

std::vector<double> resolve_values(const SampleTrace& trace, std::span<const double> x) {
  if (x.empty()) return trace.values();
  if (x.size() != trace.size()) throw std::invalid_argument("estimator: x must have one value per record");
  return {x.begin(), x.end()};
}

double mean_of(const DegreeDistribution& d) {
  long double m = 0.0L;
  for (auto& [k, p] : d) m += static_cast<long double>(k) * p;
  return static_cast<double>(m);
}

}  // namespace

DegreeDistribution empirical_q(const SampleTrace& trace) {
  if (trace.empty()) throw std::invalid_argument("empirical_q: empty trace");
  return DegreeDistribution::from_sequence(trace.degrees());
}

EstimationReport rw_correct(const SampleTrace& trace, std::span<const double> x) {
  if (trace.empty()) throw std::invalid_argument("rw_correct: empty trace");
  const auto values = resolve_values(trace, x);
  long double num = 0.0L, den = 0.0L;
  DegreeDistribution::Map weights;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const Degree k = trace.records[i].degree;
    if (k == 0) throw std::domain_error("rw_correct: zero degree in trace");
    num += values[i] / static_cast<long double>(k);
    den += 1.0L / k;
    weights[k] += 1.0 / k;
  }
  EstimationReport report;
  report.technique = "rw";
  report.value = static_cast<double>(num / den);
  report.distribution = DegreeDistribution::from_weights(weights);
  report.mean_degree = static_cast<double>(static_cast<long double>(trace.size()) / den);
  return report;
}

EstimationReport mhrw_correct(const SampleTrace& trace, std::span<const double> x) {
  if (trace.empty()) throw std::invalid_argument("mhrw_correct: empty trace");
  const auto values = resolve_values(trace, x);
  long double sum = 0.0L;
  for (double v : values) sum += v;
  EstimationReport report;
  report.technique = "mhrw";
  report.value = static_cast<double>(sum / static_cast<long double>(values.size()));
  report.distribution = empirical_q(trace);
  report.mean_degree = mean_of(*report.distribution);
  return report;
}

DegreeDistribution bfs_correct_at_t(const DegreeDistribution& qhat, double t) {
  if (!(t > 0.0 && t <= 1.0)) throw std::domain_error("bfs_correct_at_t: t must lie in (0,1]");
  DegreeDistribution::Map weights;
  for (auto& [k, q] : qhat) {
    if (q == 0.0) continue;
    if (k == 0) throw std::domain_error("bfs_correct_at_t: degree-0 nodes have zero inclusion weight");
    weights[k] = q / inclusion_weight(t, k);
  }
  return DegreeDistribution::from_weights(weights);
}

EstimationReport bfs_correct(const SampleTrace& trace, double f_real, std::span<const double> x,
                             const BfsCorrectOptions& options) {
  if (trace.empty()) throw std::invalid_argument("bfs_correct: empty trace");
  if (trace.with_replacement) throw std::invalid_argument("bfs_correct: walk traces are not supported");
  if (!(f_real > 0.0 && f_real <= 1.0)) throw std::domain_error("bfs_correct: f_real must lie in (0,1]");
  const auto values = resolve_values(trace, x);
  const DegreeDistribution qhat = empirical_q(trace);

  // f reached by the corrected distribution at time t, minus the target.
  auto residual = [&](double t) {
    if (t <= 0.0) return -f_real;
    return f_of_t(bfs_correct_at_t(qhat, t), t) - f_real;
  };

  SolverDiagnostics diag;
  double best_t = 1.0, best_abs = std::abs(residual(1.0));
  auto consider = [&](double t, double r) {
    if (std::abs(r) < best_abs) {
      best_abs = std::abs(r);
      best_t = t;
    }
  };

  double lo = 0.0, hi = 1.0;
  const double r_lo = residual(lo), r_hi = residual(hi);
  if (r_lo <= 0.0 && r_hi >= 0.0) {
    while (diag.iterations < options.max_iterations && best_abs > options.tolerance) {
      ++diag.iterations;
      const double mid = 0.5 * (lo + hi);
      const double r = residual(mid);
      consider(mid, r);
      if (mid == lo || mid == hi) break;
      (r < 0.0 ? lo : hi) = mid;
    }
  } else {
    // No bracket: damped fixed point t <- (t + t(f_real | p_hat(t))) / 2.
    double t = 0.5;
    while (diag.iterations < options.max_iterations && best_abs > options.tolerance) {
      ++diag.iterations;
      const auto phat = bfs_correct_at_t(qhat, t);
      const double target = std::min(f_real, max_coverage(phat));
      t = std::max(0.5 * t + 0.5 * t_of_f(phat, target), 1e-300);
      consider(t, residual(t));
    }
  }

  diag.t = best_t;
  diag.residual = best_abs;
  if (best_abs > options.tolerance)
    throw ConvergenceError("bfs_correct: no convergence, best residual " + std::to_string(best_abs), best_abs,
                           diag.iterations);

  long double num = 0.0L, den = 0.0L;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const double w = inclusion_weight(best_t, trace.records[i].degree);
    if (w <= 0.0) throw std::domain_error("bfs_correct: zero degree in trace");
    num += values[i] / w;
    den += 1.0L / w;
  }

  EstimationReport report;
  report.technique = "bfs";
  report.value = static_cast<double>(num / den);
  report.distribution = bfs_correct_at_t(qhat, best_t);
  report.mean_degree = mean_of(*report.distribution);
  report.diagnostics = diag;
  return report;
}

}  // namespace gsample
