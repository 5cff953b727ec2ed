#pragma once

#include <vector>

#include "gsample/degree_distribution.hpp"
#include "gsample/graph.hpp"
#include "gsample/graph_stats.hpp"
#include "gsample/rng.hpp"

namespace gsample {

/// n degrees whose empirical distribution matches d by largest-remainder
/// rounding (ties to the smaller k). An odd stub total is fixed by raising
/// one node of the class with the largest rounding deficit by one.
std::vector<Degree> degree_sequence_from_distribution(const DegreeDistribution& d, std::size_t n);

/// Configuration model: shuffle the stub array and pair consecutive entries.
/// The result may hold self-loops, parallel edges and several components.
Graph configuration_model(std::span<const Degree> sequence, Rng& rng);

struct RewireOptions {
  double target = 0.0;
  double tolerance = 0.01;
  /// 0 means 100 * |E|.
  std::size_t max_steps = 0;
};

struct RewireResult {
  Graph graph;
  double initial_r;
  double achieved_r;
  std::size_t proposals;
  std::size_t accepted;
  bool converged;  // |achieved - target| <= tolerance
};

/// Degree-preserving pairwise rewiring toward a target assortativity. Picks
/// two edges {v1,w1},{v2,w2}, proposes {v1,w2},{v2,w1} and keeps the swap only
/// when it strictly reduces |r - target| and creates no self-loop or parallel edge.
RewireResult rewire_to_assortativity(const Graph& g, const RewireOptions& options, Rng& rng);

}  // namespace gsample
