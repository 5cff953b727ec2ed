#include "gsample/graph_stats.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace gsample {

std::optional<double> AssortativitySums::coefficient() const {
  if (edges <= 0) return std::nullopt;
  // Over the 2M ordered pairs: r = (2M*Sxy' - S1^2) / (2M*S2 - S1^2) with Sxy' = 2*sum_products.
  const __int128 pairs = 2 * static_cast<__int128>(edges);
  const __int128 s1 = sum;
  const __int128 numer = pairs * 2 * static_cast<__int128>(sum_products) - s1 * s1;
  const __int128 denom = pairs * static_cast<__int128>(sum_squares) - s1 * s1;
  if (denom == 0) return std::nullopt;
  double r = static_cast<double>(numer) / static_cast<double>(denom);
  return std::clamp(r, -1.0, 1.0);
}

AssortativitySums assortativity_sums(const Graph& g) {
  AssortativitySums s;
  for (const Edge& e : g.edges()) {
    const std::int64_t a = g.degree(e.u), b = g.degree(e.v);
    ++s.edges;
    s.sum += a + b;
    s.sum_squares += a * a + b * b;
    s.sum_products += a * b;
  }
  return s;
}

std::optional<double> assortativity(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("assortativity: graph has no edges");
  return assortativity_sums(g).coefficient();
}

std::vector<int> hop_distances(const Graph& g, NodeId u, int radius) {
  if (!g.contains(u)) throw std::out_of_range("unknown node id " + std::to_string(u));
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  std::vector<int> dist(g.node_count(), -1);
  std::deque<NodeId> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    if (dist[v] == radius) continue;
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<NodeId> ball(const Graph& g, NodeId u, int radius) {
  if (!g.contains(u)) throw std::out_of_range("unknown node id " + std::to_string(u));
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  // Sparse BFS so that small balls in large graphs stay cheap.
  std::vector<NodeId> members{u};
  std::vector<NodeId> frontier{u}, next;
  std::vector<bool> seen(g.node_count(), false);
  seen[u] = true;
  for (int depth = 0; depth < radius && !frontier.empty(); ++depth) {
    next.clear();
    for (NodeId v : frontier)
      for (NodeId w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          next.push_back(w);
          members.push_back(w);
        }
    frontier.swap(next);
  }
  std::sort(members.begin(), members.end());
  return members;
}

GraphSummary summarize(const Graph& g) {
  auto m = moments(degree_distribution(g));
  return {g.node_count(), g.edge_count(), m.mean, m.ratio,
          g.edge_count() ? assortativity(g) : std::nullopt};
}

}  // namespace gsample
