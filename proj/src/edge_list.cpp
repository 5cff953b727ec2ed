#include "gsample/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace gsample {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Next whitespace-delimited token, advancing pos.
std::string_view next_token(std::string_view line, std::size_t& pos) {
  while (pos < line.size() && is_space(line[pos])) ++pos;
  std::size_t start = pos;
  while (pos < line.size() && !is_space(line[pos])) ++pos;
  return line.substr(start, pos - start);
}

std::int64_t parse_id(std::string_view tok, std::size_t lineno) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(lineno, "expected integer node id, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Graph load_edge_list(std::istream& in, const LoadOptions& options) {
  std::unordered_map<std::int64_t, NodeId> ids;
  std::vector<std::int64_t> labels;
  std::vector<Edge> edges;

  auto intern = [&](std::int64_t label) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    std::size_t pos = 0;
    auto first = next_token(view, pos);
    if (first.empty() || first.front() == '#') continue;
    auto second = next_token(view, pos);
    if (second.empty()) throw ParseError(lineno, "expected two node ids");
    if (!next_token(view, pos).empty()) throw ParseError(lineno, "trailing tokens after edge");
    NodeId u = intern(parse_id(first, lineno));
    NodeId v = intern(parse_id(second, lineno));
    if (u == v && options.drop_self_loops) continue;
    edges.push_back({std::min(u, v), std::max(u, v)});
  }

  if (options.collapse_duplicates) {
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }
  if (edges.empty()) throw std::runtime_error("edge list: no edges after preprocessing");

  // Nodes that only had self-loops may now be isolated; the component pass removes them.
  const std::size_t n = labels.size();
  Graph g(n, std::move(edges), std::move(labels));
  if (options.largest_component_only) g = largest_component(g);
  if (g.node_count() == 0) throw std::runtime_error("edge list: empty graph after preprocessing");
  return g;
}

Graph load_edge_list_file(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list '" + path + "'");
  return load_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# nodes " << g.node_count() << " edges " << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace gsample
