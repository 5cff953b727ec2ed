#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gsample/types.hpp"

namespace gsample {

struct TraceRecord {
  NodeId node;
  Degree degree;
  std::optional<double> x;
};

/// Ordered sample S. Traversals never repeat a node; walks may.
struct SampleTrace {
  std::vector<TraceRecord> records;
  bool with_replacement = false;
  double coverage = 0.0;  // f
  NodeId seed = 0;
  std::string technique;
  std::uint64_t rng_seed = 0;

  std::size_t size() const noexcept { return records.size(); }
  bool empty() const noexcept { return records.empty(); }
  std::size_t distinct_nodes() const;
  std::vector<Degree> degrees() const;
  std::vector<NodeId> nodes() const;
  /// x(v) per record; records without a value fall back to the degree.
  std::vector<double> values() const;

  /// f = distinct nodes / population.
  void set_population(std::size_t population);
};

/// CSV with '#' metadata lines followed by "position,node,degree,x_value".
void write_trace_csv(std::ostream& out, const SampleTrace& trace);
/// Throws ParseError on malformed rows.
SampleTrace read_trace_csv(std::istream& in);

}  // namespace gsample
