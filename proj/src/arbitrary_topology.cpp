#include "gsample/arbitrary_topology.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "gsample/graph_stats.hpp"
#include "gsample/samplers.hpp"

namespace gsample {

const char* to_string(NeighborhoodScheme::Variant v) {
  switch (v) {
    case NeighborhoodScheme::Variant::trivial: return "trivial";
    case NeighborhoodScheme::Variant::extreme: return "extreme";
    case NeighborhoodScheme::Variant::half_radius: return "half_radius";
    case NeighborhoodScheme::Variant::half_radius_extended: return "half_radius_extended";
  }
  return "unknown";
}

namespace {

using Variant = NeighborhoodScheme::Variant;

/// The i-stage BFS sample as seen by the estimator. Reading a node outside
/// B_i(seed), or the neighbor list of a node on the outer shell (never
/// expanded by the BFS), is a feasibility violation.
class BallSample {
 public:
  BallSample(const Graph& g, NodeId seed, int depth) : g_(g), depth_(depth) {
    dist_[seed] = 0;
    std::vector<NodeId> frontier{seed}, next;
    for (int d = 0; d < depth; ++d) {
      next.clear();
      for (NodeId v : frontier)
        for (NodeId w : g.neighbors(v))
          if (dist_.try_emplace(w, d + 1).second) next.push_back(w);
      frontier.swap(next);
    }
  }

  bool contains(NodeId v) const { return dist_.count(v) != 0; }
  int distance(NodeId v) const {
    auto it = dist_.find(v);
    if (it == dist_.end()) throw std::logic_error("feasibility violated: node outside the sample");
    return it->second;
  }
  double value(NodeId v, std::span<const double> x) const {
    distance(v);
    return x[v];
  }
  std::span<const NodeId> expand(NodeId v) const {
    if (distance(v) >= depth_) throw std::logic_error("feasibility violated: expanding an unexpanded node");
    return g_.neighbors(v);
  }
  std::size_t size() const { return dist_.size(); }
  std::vector<NodeId> members() const {
    std::vector<NodeId> out;
    out.reserve(dist_.size());
    for (auto& [v, d] : dist_) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// |B_radius(v)| using only expandable nodes of the sample.
  std::size_t ball_size(NodeId v, int radius) const {
    std::unordered_map<NodeId, int> seen{{v, 0}};
    std::vector<NodeId> frontier{v}, next;
    for (int d = 0; d < radius; ++d) {
      next.clear();
      for (NodeId u : frontier)
        for (NodeId w : expand(u)) {
          distance(w);
          if (seen.try_emplace(w, d + 1).second) next.push_back(w);
        }
      frontier.swap(next);
    }
    return seen.size();
  }

 private:
  const Graph& g_;
  int depth_;
  std::unordered_map<NodeId, int> dist_;
};

}  // namespace

ArbitraryTopologyEstimator::ArbitraryTopologyEstimator(const Graph& g, NeighborhoodScheme scheme,
                                                       EstimatorMode mode)
    : g_(g), scheme_(std::move(scheme)), mode_(mode) {
  const std::size_t n = g.node_count();
  if (n == 0) throw std::invalid_argument("arbitrary-topology estimator: empty graph");
  if (scheme_.depth < 1) throw std::invalid_argument("arbitrary-topology estimator: depth must be >= 1");
  if (scheme_.variant == Variant::extreme && !g.contains(scheme_.extreme_node))
    throw std::out_of_range("arbitrary-topology estimator: unknown extreme node");
  if (!scheme_.seed_probability.empty()) {
    if (scheme_.seed_probability.size() != n)
      throw std::invalid_argument("arbitrary-topology estimator: p(w) needs one entry per node");
    double total = 0.0;
    for (double p : scheme_.seed_probability) {
      if (!(p > 0.0)) throw std::invalid_argument("arbitrary-topology estimator: p(w) must be positive");
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("arbitrary-topology estimator: p(w) must sum to 1");
  }

  if (mode_ == EstimatorMode::sample_only) {
    if (scheme_.variant == Variant::half_radius_extended)
      throw std::invalid_argument("half-radius extended is not feasible from the sample alone; use oracle mode");
    if (scheme_.variant == Variant::half_radius && !scheme_.seed_probability.empty())
      throw std::invalid_argument("half-radius needs uniform seeds to compute pi from the sample");
    return;
  }

  if (scheme_.variant == Variant::half_radius_extended) {
    depth_balls_.resize(n);
    for (NodeId v = 0; v < n; ++v) depth_balls_[v] = ball(g, v, scheme_.depth);
  }
  pi_.assign(n, 0.0);
  for (NodeId w = 0; w < n; ++w)
    for (NodeId v : neighborhood(w)) pi_[v] += seed_probability(w);
}

double ArbitraryTopologyEstimator::seed_probability(NodeId w) const {
  return scheme_.seed_probability.empty() ? 1.0 / static_cast<double>(g_.node_count())
                                          : scheme_.seed_probability[w];
}

std::vector<NodeId> ArbitraryTopologyEstimator::neighborhood(NodeId w) const {
  switch (scheme_.variant) {
    case Variant::trivial:
      return {w};
    case Variant::extreme:
      return w == scheme_.extreme_node ? ball(g_, w, scheme_.depth) : std::vector<NodeId>{w};
    case Variant::half_radius:
      return ball(g_, w, scheme_.depth / 2);
    case Variant::half_radius_extended: {
      auto q = ball(g_, w, scheme_.depth / 2);
      const auto& outer = depth_balls_.empty() ? ball(g_, w, scheme_.depth) : depth_balls_[w];
      for (NodeId v : outer) {
        const auto& inner = depth_balls_.empty() ? ball(g_, v, scheme_.depth) : depth_balls_[v];
        if (std::includes(outer.begin(), outer.end(), inner.begin(), inner.end())) q.push_back(v);
      }
      std::sort(q.begin(), q.end());
      q.erase(std::unique(q.begin(), q.end()), q.end());
      return q;
    }
  }
  return {};
}

EstimationReport ArbitraryTopologyEstimator::estimate(NodeId seed, std::span<const double> x) const {
  if (!g_.contains(seed)) throw std::out_of_range("arbitrary-topology estimator: unknown seed");
  if (x.size() != g_.node_count()) throw std::invalid_argument("arbitrary-topology estimator: x needs one value per node");
  if (mode_ == EstimatorMode::sample_only) return estimate_from_sample(seed, x);

  EstimationReport report;
  report.technique = to_string(scheme_.variant);
  long double total = 0.0L;
  for (NodeId v : neighborhood(seed)) total += x[v] / pi_[v];
  report.value = static_cast<double>(total);
  return report;
}

EstimationReport ArbitraryTopologyEstimator::estimate_from_sample(NodeId seed, std::span<const double> x) const {
  BallSample sample(g_, seed, scheme_.depth);
  long double total = 0.0L;
  switch (scheme_.variant) {
    case Variant::trivial:
      total = sample.value(seed, x) / seed_probability(seed);
      break;
    case Variant::extreme: {
      const NodeId star = scheme_.extreme_node;
      if (seed == star) {
        for (NodeId v : sample.members()) {
          const double pi = v == star ? seed_probability(v) : seed_probability(v) + seed_probability(star);
          total += sample.value(v, x) / pi;
        }
      } else {
        // seed lies in B_i(v*) exactly when v* lies in B_i(seed).
        const double pi = seed_probability(seed) + (sample.contains(star) ? seed_probability(star) : 0.0);
        total = sample.value(seed, x) / pi;
      }
      break;
    }
    case Variant::half_radius: {
      const int half = scheme_.depth / 2;
      const auto n = static_cast<double>(g_.node_count());
      for (NodeId v : sample.members()) {
        if (sample.distance(v) > half) continue;
        const double pi = static_cast<double>(sample.ball_size(v, half)) / n;
        total += sample.value(v, x) / pi;
      }
      break;
    }
    case Variant::half_radius_extended:
      throw std::logic_error("half-radius extended requires oracle mode");
  }
  EstimationReport report;
  report.technique = to_string(scheme_.variant);
  report.value = static_cast<double>(total);
  return report;
}

EstimationReport arbitrary_topology_estimate(const Graph& g, std::span<const double> x, NodeId seed,
                                             const NeighborhoodScheme& scheme, EstimatorMode mode) {
  return ArbitraryTopologyEstimator(g, scheme, mode).estimate(seed, x);
}

std::vector<ComparisonRow> rmse_compare(const Graph& g, std::span<const double> x, const ComparisonSetup& setup,
                                        Rng& rng) {
  const std::size_t n = g.node_count();
  if (setup.replicas == 0) throw std::invalid_argument("rmse_compare: replicas must be >= 1");
  if (x.size() != n) throw std::invalid_argument("rmse_compare: x needs one value per node");
  long double truth = 0.0L;
  for (double v : x) truth += v;
  truth /= static_cast<long double>(n);

  std::vector<ArbitraryTopologyEstimator> estimators;
  for (const auto& s : setup.schemes) {
    const auto mode = s.variant == Variant::half_radius_extended ? EstimatorMode::oracle : EstimatorMode::sample_only;
    estimators.emplace_back(g, s, mode);
  }
  const std::size_t methods = estimators.size() + (setup.include_rg_based ? 1 : 0);
  std::vector<long double> sum(methods, 0.0L), sq(methods, 0.0L);
  long double iterations = 0.0L;
  double worst_residual = 0.0;

  for (std::size_t r = 0; r < setup.replicas; ++r) {
    const auto seed = static_cast<NodeId>(uniform_below(rng, n));
    for (std::size_t m = 0; m < estimators.size(); ++m) {
      const long double est = estimators[m].estimate(seed, x).value / static_cast<long double>(n);
      sum[m] += est;
      sq[m] += (est - truth) * (est - truth);
    }
    if (setup.include_rg_based) {
      const std::size_t size = ball(g, seed, setup.rg_depth).size();
      SampleTrace trace = bfs(g, seed, size);
      std::vector<double> values;
      for (auto& rec : trace.records) values.push_back(x[rec.node]);
      const auto report = bfs_correct(trace, static_cast<double>(size) / static_cast<double>(n), values);
      const long double est = report.value;
      sum.back() += est;
      sq.back() += (est - truth) * (est - truth);
      iterations += report.diagnostics.iterations;
      worst_residual = std::max(worst_residual, report.diagnostics.residual);
    }
  }

  std::vector<ComparisonRow> rows;
  const auto reps = static_cast<long double>(setup.replicas);
  for (std::size_t m = 0; m < methods; ++m) {
    ComparisonRow row;
    const bool rg = setup.include_rg_based && m + 1 == methods;
    row.method = rg ? "rg_based" : std::string(to_string(setup.schemes[m].variant)) + "_i" +
                                       std::to_string(setup.schemes[m].depth);
    row.mean_estimate = static_cast<double>(sum[m] / reps);
    row.rmse = static_cast<double>(std::sqrt(sq[m] / reps));
    row.replicas = setup.replicas;
    if (rg) {
      row.diag_iterations = static_cast<double>(iterations / reps);
      row.diag_residual = worst_residual;
    }
    rows.push_back(row);
  }
  return rows;
}

void write_comparison_csv(std::ostream& out, std::span<const ComparisonRow> rows) {
  out.precision(10);
  out << "method,mean_estimate,rmse,replicas,diag_iterations,diag_residual\n";
  for (const auto& r : rows)
    out << r.method << ',' << r.mean_estimate << ',' << r.rmse << ',' << r.replicas << ',' << r.diag_iterations
        << ',' << r.diag_residual << '\n';
}

}  // namespace gsample
