#pragma once

#include <span>
#include <vector>

#include "gsample/graph.hpp"
#include "gsample/rng.hpp"
#include "gsample/trace.hpp"

namespace gsample {

// Node-level exploration of a fixed graph. Traversals return
// min(budget, component size) distinct nodes and iterate neighbors in
// adjacency storage order. Walk traces start with the seed and have exactly
// `steps` records. All traces get f = distinct nodes / |V|.

SampleTrace bfs(const Graph& g, NodeId seed, std::size_t budget);
SampleTrace dfs(const Graph& g, NodeId seed, std::size_t budget);

/// BFS where each incident edge of the node being expanded is followed with
/// probability p. When the fire dies out it restarts from a uniformly chosen
/// sampled node that still has an unvisited neighbor. p = 1 reproduces bfs().
SampleTrace forest_fire(const Graph& g, NodeId seed, std::size_t budget, double p, Rng& rng);

/// n-name snowball: from each visited node, min(n, #distinct neighbors)
/// neighbors are chosen uniformly (kept in adjacency order) and scheduled if
/// unvisited. Revives like forest_fire().
SampleTrace snowball(const Graph& g, NodeId seed, std::size_t budget, std::size_t names, Rng& rng);

SampleTrace random_walk(const Graph& g, NodeId seed, std::size_t steps, Rng& rng);

/// Metropolis-Hastings walk: a proposed move u->w is accepted with
/// probability min(1, k_u/k_w), otherwise u is recorded again.
SampleTrace mhrw(const Graph& g, NodeId seed, std::size_t steps, Rng& rng);

/// Successive sampling without replacement with probability proportional to
/// degree (PPSWOR), via exponential race keys E_v / k_v. Zero-degree entries
/// are never drawn, so the result may be shorter than `budget`.
std::vector<NodeId> weighted_without_replacement(std::span<const Degree> degrees, std::size_t budget,
                                                 Rng& rng);

/// weighted_without_replacement over the degrees of g, packaged as a trace.
SampleTrace weighted_trace(const Graph& g, std::size_t budget, Rng& rng);

/// Sets x(v) on every record from a per-node attribute table.
void attach_values(SampleTrace& trace, std::span<const double> per_node);

}  // namespace gsample
