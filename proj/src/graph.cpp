#include "gsample/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace gsample {

Graph::Graph(std::size_t node_count, std::vector<Edge> edges)
    : Graph(node_count, std::move(edges), {}) {}

Graph::Graph(std::size_t node_count, std::vector<Edge> edges, std::vector<std::int64_t> labels)
    : edges_(std::move(edges)), labels_(std::move(labels)) {
  if (node_count > std::numeric_limits<NodeId>::max())
    throw std::length_error("graph: too many nodes");
  if (!labels_.empty() && labels_.size() != node_count)
    throw std::invalid_argument("graph: label table size differs from node count");

  std::vector<std::size_t> deg(node_count, 0);
  for (const Edge& e : edges_) {
    if (e.u >= node_count || e.v >= node_count)
      throw std::out_of_range("graph: edge endpoint out of range");
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(node_count + 1, 0);
  for (std::size_t v = 0; v < node_count; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  targets_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    targets_[fill[e.u]++] = e.v;
    targets_[fill[e.v]++] = e.u;
  }
}

std::vector<Degree> Graph::degrees() const {
  std::vector<Degree> out(node_count());
  for (NodeId v = 0; v < out.size(); ++v) out[v] = degree(v);
  return out;
}

std::vector<std::uint32_t> connected_components(const Graph& g) {
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> comp(g.node_count(), unset);
  std::vector<NodeId> stack;
  std::uint32_t next = 0;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (comp[s] != unset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId w : g.neighbors(u)) {
        if (comp[w] == unset) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> keep) {
  constexpr auto absent = std::numeric_limits<NodeId>::max();
  std::vector<NodeId> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<NodeId> remap(g.node_count(), absent);
  std::vector<std::int64_t> labels;
  labels.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    remap.at(sorted[i]) = static_cast<NodeId>(i);
    labels.push_back(g.label(sorted[i]));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (remap[e.u] != absent && remap[e.v] != absent) edges.push_back({remap[e.u], remap[e.v]});
  }
  return Graph(sorted.size(), std::move(edges), std::move(labels));
}

Graph largest_component(const Graph& g) {
  if (g.node_count() == 0) return g;
  auto comp = connected_components(g);
  std::vector<std::size_t> sizes(*std::max_element(comp.begin(), comp.end()) + 1, 0);
  for (auto c : comp) ++sizes[c];
  auto best = static_cast<std::uint32_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<NodeId> keep;
  keep.reserve(sizes[best]);
  for (NodeId v = 0; v < comp.size(); ++v)
    if (comp[v] == best) keep.push_back(v);
  return induced_subgraph(g, keep);
}

}  // namespace gsample
