#include "gsample/analytic.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "gsample/types.hpp"

namespace gsample {

namespace {

void check_time(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("time t must lie in [0,1]");
}

}  // namespace

double inclusion_weight(double t, Degree k) {
  if (k == 0) return 0.0;
  if (t >= 1.0) return 1.0;
  // (1-t)^k = exp(k log1p(-t)); expm1 keeps the small-t end exact.
  return -std::expm1(static_cast<double>(k) * std::log1p(-t));
}

DegreeDistribution::Map f_k_of_t(const DegreeDistribution& d, double t) {
  check_time(t);
  DegreeDistribution::Map out;
  for (auto& [k, p] : d) out[k] = p * inclusion_weight(t, k);
  return out;
}

double f_of_t(const DegreeDistribution& d, double t) {
  check_time(t);
  long double f = 0.0L;
  for (auto& [k, p] : d) f += p * inclusion_weight(t, k);
  return static_cast<double>(f);
}

double max_coverage(const DegreeDistribution& d) { return 1.0 - d[0]; }

double t_of_f(const DegreeDistribution& d, double f) {
  if (!(f >= 0.0)) throw std::domain_error("coverage f must be non-negative");
  const double f_max = max_coverage(d);
  if (f > f_max + 1e-15) throw UnreachableCoverage("unreachable coverage: f > " + std::to_string(f_max));
  if (f == 0.0) return 0.0;
  if (f >= f_max) return 1.0;

  double lo = 0.0, hi = 1.0;
  double best_t = 0.5, best_residual = 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double value = f_of_t(d, mid);
    const double residual = std::abs(value - f);
    if (residual < best_residual) {
      best_residual = residual;
      best_t = mid;
    }
    if (residual <= 1e-14 || mid == lo || mid == hi) break;
    (value < f ? lo : hi) = mid;
  }
  return best_t;
}

DegreeDistribution q_k_of_t(const DegreeDistribution& d, double t) {
  check_time(t);
  if (t == 0.0) return rw_expected(d).q;
  DegreeDistribution::Map weights;
  for (auto& [k, p] : d) {
    double w = p * inclusion_weight(t, k);
    if (w > 0.0) weights[k] = w;
  }
  return DegreeDistribution::from_weights(weights);
}

DegreeDistribution q_k_of_f(const DegreeDistribution& d, double f) {
  return q_k_of_t(d, t_of_f(d, f));
}

double mean_q_of_f(const DegreeDistribution& d, double f) {
  const double t = t_of_f(d, f);
  if (t == 0.0) return moments(d).ratio;
  long double num = 0.0L, den = 0.0L;
  for (auto& [k, p] : d) {
    const double w = p * inclusion_weight(t, k);
    num += static_cast<long double>(k) * w;
    den += w;
  }
  return static_cast<double>(num / den);
}

WalkExpectation rw_expected(const DegreeDistribution& d) {
  const auto m = moments(d);
  DegreeDistribution::Map q;
  for (auto& [k, p] : d)
    if (k > 0 && p > 0.0) q[k] = k * p;
  return {DegreeDistribution::from_weights(q), m.ratio};
}

WalkExpectation mhrw_expected(const DegreeDistribution& d) { return {d, moments(d).mean}; }

namespace {

void enumerate_paths(std::span<const Degree> degrees, int remaining, long double z_left, long double prob,
                     std::vector<bool>& used, std::vector<long double>& out) {
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    if (used[v] || degrees[v] == 0) continue;
    const long double p = prob * degrees[v] / z_left;
    if (remaining == 1) {
      out[v] += p;
      continue;
    }
    used[v] = true;
    const long double rest = z_left - degrees[v];
    if (rest > 0) enumerate_paths(degrees, remaining - 1, rest, p, used, out);
    used[v] = false;
  }
}

}  // namespace

std::vector<double> exact_step_distribution(std::span<const Degree> degrees, int step) {
  if (step < 1 || step > 3) throw std::invalid_argument("exact step distribution: step must be 1, 2 or 3");
  if (step == 3 && degrees.size() > 12) throw std::invalid_argument("exact step distribution: at most 12 nodes for step 3");
  if (static_cast<std::size_t>(step) > degrees.size())
    throw std::invalid_argument("exact step distribution: step exceeds sequence length");
  long double z = 0.0L;
  for (Degree k : degrees) z += k;
  if (z <= 0) throw std::invalid_argument("exact step distribution: all degrees zero");

  std::vector<long double> acc(degrees.size(), 0.0L);
  std::vector<bool> used(degrees.size(), false);
  enumerate_paths(degrees, step, z, 1.0L, used, acc);
  return {acc.begin(), acc.end()};
}

void write_curve_csv(std::ostream& out, const DegreeDistribution& d, std::span<const double> f_grid) {
  out.precision(12);
  out << "f,t,mean_q,q_k_json\n";
  for (double f : f_grid) {
    const double t = t_of_f(d, f);
    nlohmann::json q = nlohmann::json::object();
    for (auto& [k, p] : q_k_of_t(d, t)) q[std::to_string(k)] = p;
    std::string js = q.dump();
    std::string quoted;
    for (char c : js) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    out << f << ',' << t << ',' << mean_q_of_f(d, f) << ",\"" << quoted << "\"\n";
  }
}

}  // namespace gsample
