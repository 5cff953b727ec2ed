#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gsample/types.hpp"

namespace gsample {

struct Edge {
  NodeId u;
  NodeId v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph over dense ids 0..n-1. Immutable once built.
///
/// A self-loop {u,u} is one edge and contributes two entries to the adjacency
/// of u, so degree(u) counts stub endpoints and sum of degrees is 2|E|.
/// Parallel edges show up as repeated neighbors.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t node_count, std::vector<Edge> edges);
  Graph(std::size_t node_count, std::vector<Edge> edges, std::vector<std::int64_t> labels);

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t stub_count() const noexcept { return targets_.size(); }

  Degree degree(NodeId v) const { return static_cast<Degree>(offsets_[v + 1] - offsets_[v]); }
  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::vector<Degree> degrees() const;

  bool contains(NodeId v) const noexcept { return v < node_count(); }

  /// Original node label from the input file (identity for generated graphs).
  std::int64_t label(NodeId v) const { return labels_.empty() ? static_cast<std::int64_t>(v) : labels_[v]; }
  const std::vector<std::int64_t>& labels() const noexcept { return labels_; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> labels_;
};

/// Component id per node (0-based, in order of first appearance).
std::vector<std::uint32_t> connected_components(const Graph& g);

/// Induced subgraph on `keep` (ids are re-densified in ascending order of the
/// old ids; labels carried over).
Graph induced_subgraph(const Graph& g, std::span<const NodeId> keep);

/// Restriction to the largest connected component (ties broken by lowest id).
Graph largest_component(const Graph& g);

}  // namespace gsample
