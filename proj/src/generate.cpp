#include "gsample/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace gsample {

std::vector<Degree> degree_sequence_from_distribution(const DegreeDistribution& d, std::size_t n) {
  if (n == 0) throw std::invalid_argument("degree sequence: need at least one node");
  if (d.empty()) throw std::invalid_argument("degree sequence: empty distribution");

  struct Class {
    Degree k;
    double exact;
    std::size_t count;
  };
  std::vector<Class> classes;
  std::size_t assigned = 0;
  for (auto& [k, p] : d) {
    double exact = p * static_cast<double>(n);
    auto count = static_cast<std::size_t>(std::floor(exact));
    classes.push_back({k, exact, count});
    assigned += count;
  }
  // Largest remainder; ties go to the smaller degree (stable order by k).
  std::vector<std::size_t> order(classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return classes[a].exact - static_cast<double>(classes[a].count) >
           classes[b].exact - static_cast<double>(classes[b].count);
  });
  for (std::size_t i = 0; assigned < n; i = (i + 1) % order.size()) {
    ++classes[order[i]].count;
    ++assigned;
  }

  std::uint64_t stubs = 0;
  for (auto& c : classes) stubs += static_cast<std::uint64_t>(c.k) * c.count;

  std::map<Degree, std::size_t> counts;
  for (auto& c : classes)
    if (c.count) counts[c.k] += c.count;

  if (stubs % 2 == 1) {
    const Class* pick = nullptr;
    for (auto& c : classes) {
      if (c.count == 0) continue;
      if (!pick || c.exact - static_cast<double>(c.count) > pick->exact - static_cast<double>(pick->count))
        pick = &c;
    }
    --counts[pick->k];
    ++counts[pick->k + 1];
  }

  std::vector<Degree> seq;
  seq.reserve(n);
  for (auto& [k, c] : counts) seq.insert(seq.end(), c, k);
  return seq;
}

Graph configuration_model(std::span<const Degree> sequence, Rng& rng) {
  std::uint64_t total = 0;
  for (Degree k : sequence) total += k;
  if (total % 2 != 0) throw std::invalid_argument("configuration model: odd stub total");

  std::vector<NodeId> stubs;
  stubs.reserve(total);
  for (NodeId v = 0; v < sequence.size(); ++v) stubs.insert(stubs.end(), sequence[v], v);
  for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[uniform_below(rng, i)]);

  std::vector<Edge> edges;
  edges.reserve(total / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) edges.push_back({stubs[i], stubs[i + 1]});
  return Graph(sequence.size(), std::move(edges));
}

namespace {

std::uint64_t edge_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

RewireResult rewire_to_assortativity(const Graph& g, const RewireOptions& options, Rng& rng) {
  if (g.edge_count() < 2) throw std::invalid_argument("rewire: need at least two edges");
  if (!(options.target > -1.0 && options.target < 1.0))
    throw std::invalid_argument("rewire: target must lie in (-1, 1)");

  AssortativitySums sums = assortativity_sums(g);
  auto initial = sums.coefficient();
  if (!initial) throw std::domain_error("rewire: assortativity undefined for this graph");

  std::vector<Edge> edges = g.edges();
  std::unordered_map<std::uint64_t, std::uint32_t> multiplicity;
  multiplicity.reserve(edges.size() * 2);
  for (const Edge& e : edges) ++multiplicity[edge_key(e.u, e.v)];

  const std::size_t max_steps = options.max_steps ? options.max_steps : 100 * edges.size();
  double r = *initial;
  double gap = std::abs(r - options.target);
  std::size_t proposals = 0, accepted = 0;

  while (gap > options.tolerance && proposals < max_steps) {
    ++proposals;
    std::size_t i = uniform_below(rng, edges.size());
    std::size_t j = uniform_below(rng, edges.size() - 1);
    if (j >= i) ++j;
    NodeId v1 = edges[i].u, w1 = edges[i].v;
    if (bernoulli(rng, 0.5)) std::swap(v1, w1);
    NodeId v2 = edges[j].u, w2 = edges[j].v;

    if (v1 == w2 || v2 == w1) continue;
    const auto key_a = edge_key(v1, w2), key_b = edge_key(v2, w1);
    if (key_a == key_b) continue;
    if (auto it = multiplicity.find(key_a); it != multiplicity.end() && it->second > 0) continue;
    if (auto it = multiplicity.find(key_b); it != multiplicity.end() && it->second > 0) continue;

    const std::int64_t kv1 = g.degree(v1), kw1 = g.degree(w1), kv2 = g.degree(v2), kw2 = g.degree(w2);
    AssortativitySums trial = sums;
    trial.sum_products += kv1 * kw2 + kv2 * kw1 - kv1 * kw1 - kv2 * kw2;
    auto trial_r = trial.coefficient();
    if (!trial_r) continue;
    double trial_gap = std::abs(*trial_r - options.target);
    if (!(trial_gap < gap)) continue;

    --multiplicity[edge_key(v1, w1)];
    --multiplicity[edge_key(v2, w2)];
    ++multiplicity[key_a];
    ++multiplicity[key_b];
    edges[i] = {v1, w2};
    edges[j] = {v2, w1};
    sums = trial;
    r = *trial_r;
    gap = trial_gap;
    ++accepted;
  }

  return {Graph(g.node_count(), std::move(edges), g.labels()), *initial, r, proposals, accepted,
          gap <= options.tolerance};
}

}  // namespace gsample
