#pragma once

#include <map>
#include <span>
#include <string>

#include "gsample/graph.hpp"

namespace gsample {

/// Fractions p_k of nodes with degree k. Values are fractions of a concrete
/// population, not probabilities, so p_k also pins down a degree sequence.
class DegreeDistribution {
 public:
  using Map = std::map<Degree, double>;

  DegreeDistribution() = default;
  /// Validating constructor: non-negative entries summing to 1 (1e-12), some k > 0 with p_k > 0.
  explicit DegreeDistribution(Map entries);

  /// Normalizes non-negative weights first.
  static DegreeDistribution from_weights(const Map& weights);
  /// Empirical distribution of a degree sequence.
  static DegreeDistribution from_sequence(std::span<const Degree> degrees);
  /// Parses "powerlaw:<alpha>:<kmin>:<kmax>", "regular:<d>" or "k:p,k:p,...".
  static DegreeDistribution parse(const std::string& spec);

  const Map& entries() const noexcept { return entries_; }
  double operator[](Degree k) const;
  bool empty() const noexcept { return entries_.empty(); }
  Degree max_degree() const;

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

 private:
  Map entries_;
};

struct Moments {
  double mean;   // <k>
  double ratio;  // <k^2>/<k>
};

/// Throws std::domain_error when the mean is zero.
Moments moments(const DegreeDistribution& d);

DegreeDistribution degree_distribution(const Graph& g);

/// Truncated power law p_k proportional to k^-alpha on [kmin, kmax].
DegreeDistribution truncated_power_law(double alpha, Degree kmin, Degree kmax);

}  // namespace gsample
