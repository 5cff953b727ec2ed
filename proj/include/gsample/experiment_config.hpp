#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsample/edge_list.hpp"

namespace gsample {

/// Invalid experiment configuration (maps to CLI exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GraphSource {
  // Exactly one of `file` or the generator fields is used.
  std::optional<std::string> file;
  LoadOptions load;

  std::string pk = "powerlaw:2.5:1:100";
  std::size_t nodes = 10000;
  std::optional<double> assortativity;
  double rewire_tolerance = 0.01;
  bool largest_component = true;
  bool regenerate_per_replica = true;

  bool generated() const noexcept { return !file.has_value(); }
};

struct TechniqueSpec {
  std::string name;       // bfs, dfs, ff, sbs, rw, mhrw, wwr, stub
  double burn_p = 0.7;    // ff
  std::size_t names = 3;  // sbs

  bool is_walk() const noexcept { return name == "rw" || name == "mhrw"; }
  /// Tag used in output rows and replica seed derivation, e.g. "ff(p=0.7)".
  std::string tag() const;
};

struct ExperimentConfig {
  GraphSource graph;
  std::vector<TechniqueSpec> techniques;
  std::vector<double> f_grid;
  std::size_t replicas = 200;
  std::uint64_t seed = 1;
  std::string output_dir = ".";
  std::size_t workers = 1;
  std::vector<double> assortativity_targets;  // sweep only
  int depth = 2;                              // comparison only

  /// Throws ConfigError on a violated invariant.
  void validate() const;
};

/// Reads the JSON document; unknown keys are rejected.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config(const std::string& path);
nlohmann::json to_json(const ExperimentConfig& cfg);

}  // namespace gsample
