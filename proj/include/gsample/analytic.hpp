#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "gsample/degree_distribution.hpp"

namespace gsample {

// Expected degree bias of traversals on the configuration model. Time t is
// the stub-index scan position: a degree-k node is sampled before t with
// probability 1 - (1-t)^k.

/// 1 - (1-t)^k, accurate for tiny t and large k.
double inclusion_weight(double t, Degree k);

/// f_k(t) = p_k (1 - (1-t)^k). Throws std::domain_error for t outside [0,1].
DegreeDistribution::Map f_k_of_t(const DegreeDistribution& d, double t);

/// f(t) = 1 - sum_k p_k (1-t)^k.
double f_of_t(const DegreeDistribution& d, double t);

/// Largest reachable coverage, f(1) = 1 - p_0.
double max_coverage(const DegreeDistribution& d);

/// Inverse of f_of_t by bisection on [0,1]; |f(t) - f| <= 1e-10.
/// Throws UnreachableCoverage when f > 1 - p_0.
double t_of_f(const DegreeDistribution& d, double f);

/// Expected sampled distribution q_k(t) = f_k(t) / f(t). At t = 0 the
/// limit k p_k / <k> is returned.
DegreeDistribution q_k_of_t(const DegreeDistribution& d, double t);

/// Expected sampled distribution after covering a fraction f of the nodes.
DegreeDistribution q_k_of_f(const DegreeDistribution& d, double f);

/// Expected sampled mean degree; decreases from <k^2>/<k> (f -> 0) to <k> (f = 1).
double mean_q_of_f(const DegreeDistribution& d, double f);

struct WalkExpectation {
  DegreeDistribution q;
  double mean;
};

/// Random walk: q_k = k p_k / <k>, mean <k^2>/<k>.
WalkExpectation rw_expected(const DegreeDistribution& d);
/// Metropolis-Hastings walk: q_k = p_k, mean <k>.
WalkExpectation mhrw_expected(const DegreeDistribution& d);

/// Exact law of the i-th node (i in 1..3) of degree-weighted sampling without
/// replacement, by explicit nested sums. Sequence length <= 12 for i = 3.
std::vector<double> exact_step_distribution(std::span<const Degree> degrees, int step);

/// CSV "f,t,mean_q,q_k_json" over the given f grid.
void write_curve_csv(std::ostream& out, const DegreeDistribution& d, std::span<const double> f_grid);

}  // namespace gsample
