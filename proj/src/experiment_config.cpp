#include "gsample/experiment_config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "gsample/degree_distribution.hpp"

namespace gsample {

using nlohmann::json;

std::string TechniqueSpec::tag() const {
  std::ostringstream os;
  os << name;
  if (name == "ff") os << "(p=" << burn_p << ")";
  if (name == "sbs") os << "(n=" << names << ")";
  return os.str();
}

void ExperimentConfig::validate() const {
  static const std::set<std::string> known{"bfs", "dfs", "ff", "sbs", "rw", "mhrw", "wwr", "stub"};
  if (replicas < 1) throw ConfigError("replicas must be >= 1");
  if (workers < 1) throw ConfigError("workers must be >= 1");
  for (double f : f_grid)
    if (!(f > 0.0 && f <= 1.0)) throw ConfigError("f grid values must lie in (0,1]");
  for (const auto& t : techniques) {
    if (!known.count(t.name)) throw ConfigError("unknown technique '" + t.name + "'");
    if (t.name == "ff" && !(t.burn_p > 0.0 && t.burn_p <= 1.0)) throw ConfigError("ff burn probability must be in (0,1]");
    if (t.name == "sbs" && t.names < 1) throw ConfigError("sbs needs n >= 1");
  }
  if (graph.generated()) {
    if (graph.nodes < 1) throw ConfigError("generated graph needs nodes >= 1");
    try {
      DegreeDistribution::parse(graph.pk);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    if (graph.assortativity && !(*graph.assortativity > -1.0 && *graph.assortativity < 1.0))
      throw ConfigError("assortativity target must lie in (-1,1)");
  }
  for (double r : assortativity_targets)
    if (!(r > -1.0 && r < 1.0)) throw ConfigError("assortativity targets must lie in (-1,1)");
  if (depth < 1) throw ConfigError("depth must be >= 1");
}

namespace {

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw ConfigError("unknown key '" + it.key() + "' in " + where);
  }
}

TechniqueSpec parse_technique(const json& j) {
  TechniqueSpec t;
  if (j.is_string()) {
    t.name = j.get<std::string>();
    return t;
  }
  if (!j.is_object()) throw ConfigError("technique must be a name or an object");
  reject_unknown(j, {"name", "p", "n"}, "technique");
  t.name = j.at("name").get<std::string>();
  t.burn_p = j.value("p", t.burn_p);
  t.names = j.value("n", t.names);
  return t;
}

}  // namespace

ExperimentConfig parse_config(const json& doc) {
  ExperimentConfig cfg;
  try {
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    reject_unknown(doc, {"graph", "techniques", "f_grid", "replicas", "seed", "out", "workers",
                         "assortativity_targets", "depth"},
                   "config");
    if (!doc.contains("graph")) throw ConfigError("config needs a 'graph' section");
    const json& g = doc.at("graph");
    reject_unknown(g, {"file", "keep_self_loops", "keep_duplicates", "largest_component", "pk", "nodes",
                       "assortativity", "rewire_tolerance", "regenerate_per_replica"},
                   "graph");
    const bool has_file = g.contains("file");
    const bool has_model = g.contains("pk") || g.contains("nodes");
    if (has_file == has_model) throw ConfigError("graph needs exactly one source: 'file' or 'pk'+'nodes'");
    if (has_file) {
      cfg.graph.file = g.at("file").get<std::string>();
      cfg.graph.load.drop_self_loops = !g.value("keep_self_loops", false);
      cfg.graph.load.collapse_duplicates = !g.value("keep_duplicates", false);
      cfg.graph.load.largest_component_only = g.value("largest_component", true);
      cfg.graph.regenerate_per_replica = false;
    } else {
      cfg.graph.pk = g.value("pk", cfg.graph.pk);
      cfg.graph.nodes = g.value("nodes", cfg.graph.nodes);
      if (g.contains("assortativity") && !g.at("assortativity").is_null())
        cfg.graph.assortativity = g.at("assortativity").get<double>();
      cfg.graph.rewire_tolerance = g.value("rewire_tolerance", cfg.graph.rewire_tolerance);
      cfg.graph.largest_component = g.value("largest_component", cfg.graph.largest_component);
      cfg.graph.regenerate_per_replica = g.value("regenerate_per_replica", cfg.graph.regenerate_per_replica);
    }
    if (doc.contains("techniques"))
      for (const auto& t : doc.at("techniques")) cfg.techniques.push_back(parse_technique(t));
    if (doc.contains("f_grid")) cfg.f_grid = doc.at("f_grid").get<std::vector<double>>();
    cfg.replicas = doc.value("replicas", cfg.replicas);
    cfg.seed = doc.value("seed", cfg.seed);
    cfg.output_dir = doc.value("out", cfg.output_dir);
    cfg.workers = doc.value("workers", cfg.workers);
    if (doc.contains("assortativity_targets"))
      cfg.assortativity_targets = doc.at("assortativity_targets").get<std::vector<double>>();
    cfg.depth = doc.value("depth", cfg.depth);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
  return parse_config(doc);
}

json to_json(const ExperimentConfig& cfg) {
  json doc;
  json g;
  if (cfg.graph.file) {
    g["file"] = *cfg.graph.file;
    g["keep_self_loops"] = !cfg.graph.load.drop_self_loops;
    g["keep_duplicates"] = !cfg.graph.load.collapse_duplicates;
    g["largest_component"] = cfg.graph.load.largest_component_only;
  } else {
    g["pk"] = cfg.graph.pk;
    g["nodes"] = cfg.graph.nodes;
    g["assortativity"] = cfg.graph.assortativity ? json(*cfg.graph.assortativity) : json(nullptr);
    g["rewire_tolerance"] = cfg.graph.rewire_tolerance;
    g["largest_component"] = cfg.graph.largest_component;
    g["regenerate_per_replica"] = cfg.graph.regenerate_per_replica;
  }
  doc["graph"] = g;
  json techniques = json::array();
  for (const auto& t : cfg.techniques) {
    json tj{{"name", t.name}};
    if (t.name == "ff") tj["p"] = t.burn_p;
    if (t.name == "sbs") tj["n"] = t.names;
    techniques.push_back(tj);
  }
  doc["techniques"] = techniques;
  doc["f_grid"] = cfg.f_grid;
  doc["replicas"] = cfg.replicas;
  doc["seed"] = cfg.seed;
  doc["out"] = cfg.output_dir;
  doc["workers"] = cfg.workers;
  doc["assortativity_targets"] = cfg.assortativity_targets;
  doc["depth"] = cfg.depth;
  return doc;
}

}  // namespace gsample
