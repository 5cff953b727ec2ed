#include "gsample/trace.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace gsample {

std::size_t SampleTrace::distinct_nodes() const {
  if (!with_replacement) return records.size();
  std::unordered_set<NodeId> seen;
  for (auto& r : records) seen.insert(r.node);
  return seen.size();
}

std::vector<Degree> SampleTrace::degrees() const {
  std::vector<Degree> out;
  out.reserve(records.size());
  for (auto& r : records) out.push_back(r.degree);
  return out;
}

std::vector<NodeId> SampleTrace::nodes() const {
  std::vector<NodeId> out;
  out.reserve(records.size());
  for (auto& r : records) out.push_back(r.node);
  return out;
}

std::vector<double> SampleTrace::values() const {
  std::vector<double> out;
  out.reserve(records.size());
  for (auto& r : records) out.push_back(r.x.value_or(static_cast<double>(r.degree)));
  return out;
}

void SampleTrace::set_population(std::size_t population) {
  if (population == 0) throw std::invalid_argument("trace: empty population");
  coverage = static_cast<double>(distinct_nodes()) / static_cast<double>(population);
}

void write_trace_csv(std::ostream& out, const SampleTrace& trace) {
  out.precision(17);
  out << "# technique=" << trace.technique << '\n'
      << "# seed=" << trace.seed << '\n'
      << "# f=" << trace.coverage << '\n'
      << "# rng_seed=" << trace.rng_seed << '\n'
      << "# with_replacement=" << (trace.with_replacement ? 1 : 0) << '\n'
      << "position,node,degree,x_value\n";
  for (std::size_t i = 0; i < trace.records.size(); ++i) {
    const auto& r = trace.records[i];
    out << i << ',' << r.node << ',' << r.degree << ',';
    if (r.x) out << *r.x;
    out << '\n';
  }
}

namespace {

void apply_metadata(SampleTrace& trace, const std::string& key, const std::string& value) {
  if (key == "technique") trace.technique = value;
  else if (key == "seed") trace.seed = static_cast<NodeId>(std::stoul(value));
  else if (key == "f") trace.coverage = std::stod(value);
  else if (key == "rng_seed") trace.rng_seed = std::stoull(value);
  else if (key == "with_replacement") trace.with_replacement = value == "1" || value == "true";
}

}  // namespace

SampleTrace read_trace_csv(std::istream& in) {
  SampleTrace trace;
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      auto key = line.substr(1, eq - 1);
      key.erase(0, key.find_first_not_of(' '));
      try {
        apply_metadata(trace, key, line.substr(eq + 1));
      } catch (const std::logic_error&) {
        throw ParseError(lineno, "bad metadata value for '" + key + "'");
      }
      continue;
    }
    if (!header_seen) {
      if (line.rfind("position,node,degree", 0) != 0) throw ParseError(lineno, "missing trace header");
      header_seen = true;
      continue;
    }
    std::stringstream ss(line);
    std::string pos, node, degree, x;
    std::getline(ss, pos, ',');
    std::getline(ss, node, ',');
    std::getline(ss, degree, ',');
    std::getline(ss, x, ',');
    try {
      TraceRecord r{static_cast<NodeId>(std::stoul(node)), static_cast<Degree>(std::stoul(degree)),
                    std::nullopt};
      if (!x.empty()) r.x = std::stod(x);
      trace.records.push_back(r);
    } catch (const std::logic_error&) {
      throw ParseError(lineno, "malformed trace row");
    }
  }
  if (!header_seen) throw ParseError(lineno, "missing trace header");
  return trace;
}

}  // namespace gsample
