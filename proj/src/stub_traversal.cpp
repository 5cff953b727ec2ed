#include "gsample/stub_traversal.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gsample {

StubAssignment::StubAssignment(const std::vector<std::vector<double>>& per_node) {
  offsets_.assign(1, 0);
  for (const auto& list : per_node) {
    for (double t : list) {
      if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("stub index outside [0,1]");
      indices_.push_back(t);
    }
    offsets_.push_back(indices_.size());
  }
  std::vector<double> sorted = indices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("stub indices must be distinct");
  build_owners();
}

void StubAssignment::build_owners() {
  owners_.resize(indices_.size());
  for (NodeId v = 0; v + 1 < offsets_.size(); ++v)
    std::fill(owners_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              owners_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]), v);
}

double StubAssignment::min_index(NodeId v) const {
  auto idx = indices(v);
  return idx.empty() ? std::numeric_limits<double>::infinity() : *std::min_element(idx.begin(), idx.end());
}

StubAssignment assign_stub_indices(std::span<const Degree> sequence, Rng& rng) {
  StubAssignment a;
  a.offsets_.assign(sequence.size() + 1, 0);
  for (std::size_t v = 0; v < sequence.size(); ++v) a.offsets_[v + 1] = a.offsets_[v] + sequence[v];
  a.indices_.resize(a.offsets_.back());
  std::vector<double> sorted;
  for (;;) {
    for (double& t : a.indices_) t = uniform01(rng);
    sorted = a.indices_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) break;
  }
  a.build_owners();
  return a;
}

StubTraversal stub_level_traversal(std::span<const Degree> sequence, const StubAssignment& indices,
                                   NodeId seed, QueueDiscipline discipline, std::size_t budget, Rng* rng,
                                   StubRestart restart) {
  const std::size_t n = sequence.size();
  if (indices.node_count() != n) throw std::invalid_argument("stub traversal: assignment/sequence mismatch");
  for (NodeId v = 0; v < n; ++v)
    if (indices.indices(v).size() != sequence[v])
      throw std::invalid_argument("stub traversal: index count differs from degree");
  if (indices.stub_count() % 2 != 0) throw std::invalid_argument("stub traversal: odd stub total");
  if (seed >= n) throw std::out_of_range("stub traversal: unknown seed node");
  if (budget == 0) throw std::invalid_argument("stub traversal: budget must be >= 1");
  if (discipline.kind == QueueDiscipline::Kind::randomized_fifo) {
    if (!(discipline.p > 0.0 && discipline.p <= 1.0))
      throw std::invalid_argument("stub traversal: p must be in (0, 1]");
    if (!rng) throw std::invalid_argument("stub traversal: randomized discipline needs an rng");
  }

  const std::size_t z = indices.stub_count();
  std::vector<std::size_t> by_index(z);
  std::iota(by_index.begin(), by_index.end(), 0);
  std::sort(by_index.begin(), by_index.end(),
            [&](std::size_t a, std::size_t b) { return indices.index(a) < indices.index(b); });
  std::size_t cursor = 0;
  std::size_t restart_cursor = 0;  // stubs of unvisited nodes are never matched, so this only moves forward

  std::vector<bool> matched(z, false), in_queue(z, false), visited(n, false);
  std::deque<std::size_t> queue;
  std::size_t live = 0;
  std::vector<Edge> edges;

  StubTraversal out;
  SampleTrace& trace = out.trace;
  trace.seed = seed;
  trace.technique = "stub";

  auto discover = [&](NodeId v, std::size_t except) {
    visited[v] = true;
    trace.records.push_back({v, sequence[v], std::nullopt});
    for (std::size_t s = indices.first_stub(v); s < indices.first_stub(v) + sequence[v]; ++s) {
      if (s == except) continue;
      queue.push_back(s);
      in_queue[s] = true;
      ++live;
    }
  };

  discover(seed, z);
  while (trace.records.size() < budget) {
    if (live == 0) {
      if (restart == StubRestart::stop) break;
      while (restart_cursor < z && visited[indices.owner(by_index[restart_cursor])]) ++restart_cursor;
      if (restart_cursor == z) break;
      discover(indices.owner(by_index[restart_cursor]), z);
      continue;
    }
    std::size_t a;
    if (discipline.kind == QueueDiscipline::Kind::lifo) {
      a = queue.back();
      queue.pop_back();
    } else {
      a = queue.front();
      queue.pop_front();
    }
    if (!in_queue[a]) continue;  // removed earlier as a partner
    in_queue[a] = false;
    --live;
    if (discipline.kind == QueueDiscipline::Kind::randomized_fifo && !bernoulli(*rng, discipline.p))
      continue;  // stub lost; it stays unmatched

    matched[a] = true;
    while (cursor < z && matched[by_index[cursor]]) ++cursor;
    const std::size_t b = by_index[cursor];
    matched[b] = true;
    edges.push_back({indices.owner(a), indices.owner(b)});

    const NodeId vb = indices.owner(b);
    if (!visited[vb]) {
      discover(vb, b);
    } else if (in_queue[b]) {
      in_queue[b] = false;
      --live;
    }
  }

  out.exhausted = trace.records.size() < budget;
  trace.with_replacement = false;
  trace.set_population(n);
  out.realized = Graph(n, std::move(edges));
  return out;
}

}  // namespace gsample

namespace gsample {

NodeId first_in_scan(const StubAssignment& indices) {
  if (indices.stub_count() == 0) throw std::invalid_argument("stub assignment has no stubs");
  std::size_t best = 0;
  for (std::size_t s = 1; s < indices.stub_count(); ++s)
    if (indices.index(s) < indices.index(best)) best = s;
  return indices.owner(best);
}

}  // namespace gsample
