#include "gsample/degree_distribution.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gsample {

DegreeDistribution::DegreeDistribution(Map entries) : entries_(std::move(entries)) {
  double total = 0.0;
  bool positive_degree = false;
  for (auto& [k, p] : entries_) {
    if (!(p >= 0.0) || !std::isfinite(p))
      throw std::invalid_argument("degree distribution: negative or non-finite fraction");
    total += p;
    if (k > 0 && p > 0.0) positive_degree = true;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("degree distribution: fractions sum to " + std::to_string(total));
  if (!positive_degree)
    throw std::invalid_argument("degree distribution: no mass on k > 0");
}

DegreeDistribution DegreeDistribution::from_weights(const Map& weights) {
  // Two-pass normalization keeps the sum within a few ulps of 1.
  long double total = 0.0L;
  for (auto& [k, w] : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("degree distribution: negative weight");
    total += w;
  }
  if (total <= 0.0L) throw std::invalid_argument("degree distribution: zero total weight");
  Map out;
  for (auto& [k, w] : weights)
    if (w > 0.0) out[k] = static_cast<double>(w / total);
  return DegreeDistribution(std::move(out));
}

DegreeDistribution DegreeDistribution::from_sequence(std::span<const Degree> degrees) {
  if (degrees.empty()) throw std::invalid_argument("degree distribution: empty sequence");
  std::map<Degree, std::size_t> counts;
  for (Degree k : degrees) ++counts[k];
  Map out;
  const auto n = static_cast<double>(degrees.size());
  for (auto& [k, c] : counts) out[k] = static_cast<double>(c) / n;
  return DegreeDistribution(std::move(out));
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) parts.push_back(item);
  return parts;
}

}  // namespace

DegreeDistribution DegreeDistribution::parse(const std::string& spec) {
  auto parts = split(spec, ':');
  try {
    if (!parts.empty() && parts[0] == "powerlaw") {
      if (parts.size() != 4) throw std::invalid_argument("expected powerlaw:<alpha>:<kmin>:<kmax>");
      return truncated_power_law(std::stod(parts[1]), static_cast<Degree>(std::stoul(parts[2])),
                                 static_cast<Degree>(std::stoul(parts[3])));
    }
    if (!parts.empty() && parts[0] == "regular") {
      if (parts.size() != 2) throw std::invalid_argument("expected regular:<d>");
      return DegreeDistribution({{static_cast<Degree>(std::stoul(parts[1])), 1.0}});
    }
    Map weights;
    for (const auto& item : split(spec, ',')) {
      auto kv = split(item, ':');
      if (kv.size() != 2) throw std::invalid_argument("expected k:p pairs");
      weights[static_cast<Degree>(std::stoul(kv[0]))] += std::stod(kv[1]);
    }
    return from_weights(weights);
  } catch (const std::logic_error& e) {
    throw std::invalid_argument("bad degree distribution spec '" + spec + "': " + e.what());
  }
}

double DegreeDistribution::operator[](Degree k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? 0.0 : it->second;
}

Degree DegreeDistribution::max_degree() const {
  return entries_.empty() ? 0 : entries_.rbegin()->first;
}

Moments moments(const DegreeDistribution& d) {
  long double m1 = 0.0L, m2 = 0.0L;
  for (auto& [k, p] : d) {
    m1 += static_cast<long double>(k) * p;
    m2 += static_cast<long double>(k) * k * p;
  }
  if (m1 <= 0.0L) throw std::domain_error("moments: degenerate distribution with zero mean");
  return {static_cast<double>(m1), static_cast<double>(m2 / m1)};
}

DegreeDistribution degree_distribution(const Graph& g) {
  return DegreeDistribution::from_sequence(g.degrees());
}

DegreeDistribution truncated_power_law(double alpha, Degree kmin, Degree kmax) {
  if (kmin < 1 || kmax < kmin) throw std::invalid_argument("power law: need 1 <= kmin <= kmax");
  DegreeDistribution::Map w;
  for (Degree k = kmin; k <= kmax; ++k) w[k] = std::pow(static_cast<double>(k), -alpha);
  return DegreeDistribution::from_weights(w);
}

}  // namespace gsample
