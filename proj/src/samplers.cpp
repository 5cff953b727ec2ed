#include "gsample/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace gsample {

namespace {

void check_seed(const Graph& g, NodeId seed) {
  if (!g.contains(seed)) throw std::out_of_range("sampler: unknown seed node " + std::to_string(seed));
}

/// Node-level traversal bookkeeping shared by the traversal samplers.
class Traversal {
 public:
  Traversal(const Graph& g, NodeId seed, std::size_t budget, std::string technique)
      : g_(g), budget_(budget), visited_(g.node_count(), false) {
    check_seed(g, seed);
    if (budget == 0) throw std::invalid_argument("sampler: budget must be >= 1");
    trace_.seed = seed;
    trace_.technique = std::move(technique);
    visit(seed);
  }

  bool visited(NodeId v) const { return visited_[v]; }
  bool full() const { return trace_.records.size() >= budget_; }

  void visit(NodeId v) {
    visited_[v] = true;
    trace_.records.push_back({v, g_.degree(v), std::nullopt});
  }

  /// A sampled node with at least one unvisited neighbor, uniformly; nullopt
  /// when the sampled set is closed (its component is exhausted).
  std::optional<NodeId> revival_node(Rng& rng) {
    for (; scanned_ < trace_.records.size(); ++scanned_) candidates_.push_back(trace_.records[scanned_].node);
    while (!candidates_.empty()) {
      std::size_t i = uniform_below(rng, candidates_.size());
      NodeId u = candidates_[i];
      auto nbrs = g_.neighbors(u);
      if (std::any_of(nbrs.begin(), nbrs.end(), [&](NodeId w) { return !visited_[w]; })) return u;
      candidates_[i] = candidates_.back();
      candidates_.pop_back();
    }
    return std::nullopt;
  }

  SampleTrace finish() {
    trace_.with_replacement = false;
    trace_.set_population(g_.node_count());
    return std::move(trace_);
  }

 private:
  const Graph& g_;
  std::size_t budget_;
  std::vector<bool> visited_;
  SampleTrace trace_;
  std::vector<NodeId> candidates_;
  std::size_t scanned_ = 0;
};

}  // namespace

SampleTrace bfs(const Graph& g, NodeId seed, std::size_t budget) {
  Traversal t(g, seed, budget, "bfs");
  std::deque<NodeId> queue{seed};
  while (!queue.empty() && !t.full()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId w : g.neighbors(u)) {
      if (t.visited(w)) continue;
      t.visit(w);
      if (t.full()) break;
      queue.push_back(w);
    }
  }
  return t.finish();
}

SampleTrace dfs(const Graph& g, NodeId seed, std::size_t budget) {
  check_seed(g, seed);
  if (budget == 0) throw std::invalid_argument("sampler: budget must be >= 1");
  // Visiting happens on pop, so the trace is seeded by hand.
  std::vector<bool> visited(g.node_count(), false);
  SampleTrace trace;
  trace.seed = seed;
  trace.technique = "dfs";
  std::vector<NodeId> stack{seed};
  while (!stack.empty() && trace.records.size() < budget) {
    NodeId u = stack.back();
    stack.pop_back();
    if (visited[u]) continue;
    visited[u] = true;
    trace.records.push_back({u, g.degree(u), std::nullopt});
    auto nbrs = g.neighbors(u);
    for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it)
      if (!visited[*it]) stack.push_back(*it);
  }
  trace.set_population(g.node_count());
  return trace;
}

SampleTrace forest_fire(const Graph& g, NodeId seed, std::size_t budget, double p, Rng& rng) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("forest fire: p must be in (0, 1]");
  Traversal t(g, seed, budget, "ff");
  std::deque<NodeId> queue{seed};
  while (!t.full()) {
    if (queue.empty()) {
      auto revive = t.revival_node(rng);
      if (!revive) break;
      queue.push_back(*revive);
    }
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId w : g.neighbors(u)) {
      if (t.visited(w) || !bernoulli(rng, p)) continue;
      t.visit(w);
      if (t.full()) break;
      queue.push_back(w);
    }
  }
  return t.finish();
}

SampleTrace snowball(const Graph& g, NodeId seed, std::size_t budget, std::size_t names, Rng& rng) {
  if (names == 0) throw std::invalid_argument("snowball: need at least one name per node");
  Traversal t(g, seed, budget, "sbs");
  std::deque<NodeId> queue{seed};
  std::vector<NodeId> distinct;
  while (!t.full()) {
    if (queue.empty()) {
      auto revive = t.revival_node(rng);
      if (!revive) break;
      queue.push_back(*revive);
    }
    NodeId u = queue.front();
    queue.pop_front();

    distinct.clear();
    for (NodeId w : g.neighbors(u))
      if (std::find(distinct.begin(), distinct.end(), w) == distinct.end()) distinct.push_back(w);

    // Selection sampling: a uniform subset of size min(names, |distinct|), order kept.
    std::size_t need = std::min(names, distinct.size());
    for (std::size_t i = 0; i < distinct.size() && need > 0 && !t.full(); ++i) {
      if (uniform_below(rng, distinct.size() - i) >= need) continue;
      --need;
      NodeId w = distinct[i];
      if (t.visited(w)) continue;
      t.visit(w);
      if (!t.full()) queue.push_back(w);
    }
  }
  return t.finish();
}

namespace {

SampleTrace walk(const Graph& g, NodeId seed, std::size_t steps, Rng& rng, bool metropolis) {
  check_seed(g, seed);
  if (steps == 0) throw std::invalid_argument("walk: steps must be >= 1");
  SampleTrace trace;
  trace.seed = seed;
  trace.technique = metropolis ? "mhrw" : "rw";
  trace.with_replacement = true;
  trace.records.reserve(steps);
  NodeId u = seed;
  trace.records.push_back({u, g.degree(u), std::nullopt});
  while (trace.records.size() < steps) {
    auto nbrs = g.neighbors(u);
    if (!nbrs.empty()) {
      NodeId w = nbrs[uniform_below(rng, nbrs.size())];
      const Degree ku = g.degree(u), kw = g.degree(w);
      if (!metropolis || kw <= ku || bernoulli(rng, static_cast<double>(ku) / kw)) u = w;
    }
    trace.records.push_back({u, g.degree(u), std::nullopt});
  }
  trace.set_population(g.node_count());
  return trace;
}

}  // namespace

SampleTrace random_walk(const Graph& g, NodeId seed, std::size_t steps, Rng& rng) {
  return walk(g, seed, steps, rng, false);
}

SampleTrace mhrw(const Graph& g, NodeId seed, std::size_t steps, Rng& rng) {
  return walk(g, seed, steps, rng, true);
}

std::vector<NodeId> weighted_without_replacement(std::span<const Degree> degrees, std::size_t budget,
                                                 Rng& rng) {
  if (budget > degrees.size()) throw std::invalid_argument("weighted sampling: budget exceeds population");
  std::vector<std::pair<double, NodeId>> keys;
  keys.reserve(degrees.size());
  for (NodeId v = 0; v < degrees.size(); ++v) {
    if (degrees[v] == 0) continue;
    double e = -std::log1p(-uniform01(rng));
    keys.emplace_back(e / degrees[v], v);
  }
  const std::size_t take = std::min(budget, keys.size());
  std::partial_sort(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(take), keys.end());
  std::vector<NodeId> out;
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) out.push_back(keys[i].second);
  return out;
}

SampleTrace weighted_trace(const Graph& g, std::size_t budget, Rng& rng) {
  auto degrees = g.degrees();
  SampleTrace trace;
  trace.technique = "wwr";
  for (NodeId v : weighted_without_replacement(degrees, budget, rng))
    trace.records.push_back({v, degrees[v], std::nullopt});
  if (!trace.records.empty()) trace.seed = trace.records.front().node;
  trace.set_population(g.node_count());
  return trace;
}

void attach_values(SampleTrace& trace, std::span<const double> per_node) {
  for (auto& r : trace.records) r.x = per_node[r.node];
}

}  // namespace gsample
