#pragma once

#include <vector>

#include "gsample/graph.hpp"

namespace gsample::testing {

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v < n; ++v) edges.push_back({v, static_cast<NodeId>((v + 1) % n)});
  return Graph(n, edges);
}

inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, edges);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

}  // namespace gsample::testing
