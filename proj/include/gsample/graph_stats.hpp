#pragma once

#include <optional>
#include <vector>

#include "gsample/degree_distribution.hpp"
#include "gsample/graph.hpp"

namespace gsample {

/// Edge sums from which the degree assortativity follows in O(1).
/// Each undirected edge {u,v} contributes both orderings (k_u,k_v) and (k_v,k_u).
struct AssortativitySums {
  std::int64_t edges = 0;
  std::int64_t sum = 0;          // sum over edges of k_u + k_v
  std::int64_t sum_squares = 0;  // sum over edges of k_u^2 + k_v^2
  std::int64_t sum_products = 0; // sum over edges of k_u * k_v

  /// Pearson correlation, or nullopt when endpoint degrees have zero variance.
  std::optional<double> coefficient() const;
};

AssortativitySums assortativity_sums(const Graph& g);

/// Degree assortativity r; nullopt ("undefined") for e.g. regular graphs.
/// Throws std::invalid_argument on a graph without edges.
std::optional<double> assortativity(const Graph& g);

/// Hop distance from u for every node within `radius` hops; -1 elsewhere.
std::vector<int> hop_distances(const Graph& g, NodeId u, int radius);

/// B_i(u): all nodes within i hops of u, sorted ascending.
std::vector<NodeId> ball(const Graph& g, NodeId u, int radius);

struct GraphSummary {
  std::size_t nodes;
  std::size_t edges;
  double mean_degree;
  double k2_over_k;
  std::optional<double> assortativity;
};

GraphSummary summarize(const Graph& g);

}  // namespace gsample
