#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hcbf/grid.hpp"
#include "hcbf/reachability.hpp"
#include "hcbf/scenarios.hpp"

namespace hcbf {

struct GridSpec {
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<std::size_t> cells;
  std::vector<bool> periodic;

  Grid to_grid() const;
  static GridSpec from_grid(const Grid& grid);
};

struct RefinementSpec {
  double dt = 0.05;
  double gamma = 1.0;
  int control_samples = 3;
  double convergence_tol = 1e-6;
  int max_iters = 5000;
  GridSpec grid;

  ReachSettings settings() const;
};

struct SimulationSpec {
  std::vector<double> x0;
  std::string q0;
  double horizon = 10.0;
  double dt = 1e-3;
  bool stop_on_safety_fault = false;
};

/// Declarative run description. Every field is filled after parsing: the
/// scenario's defaults stand in for anything the file leaves out.
struct ScenarioConfig {
  std::string scenario;
  nlohmann::json params = nlohmann::json::object();  ///< effective scenario parameters
  double cbf_gamma = 1.0;
  RefinementSpec refinement;
  /// Per-transition settings keyed "from->to"; absent transitions use `refinement`.
  std::map<std::string, RefinementSpec> transitions;
  /// Precomputed refined CBFs keyed "from->to", resolved against the config's directory.
  std::map<std::string, std::filesystem::path> grid_files;
  SimulationSpec simulation;
  std::vector<std::string> policies;
  /// Transitions ("from->to") the global-intersection policy intersects; empty means all.
  std::vector<std::string> intersection_transitions;
  std::filesystem::path output_dir = "out";
};

/// Throws ConfigError on unknown keys, bad values or unresolvable paths.
ScenarioConfig parse_config(const nlohmann::json& doc, const std::filesystem::path& base_dir = ".");
ScenarioConfig load_config(const std::filesystem::path& path);
nlohmann::json to_json(const ScenarioConfig& config);

std::string transition_key(const HybridAutomaton& automaton, Transition t);
/// Stem used in artifact names, e.g. "dry_ice".
std::string transition_stem(const HybridAutomaton& automaton, Transition t);

/// Builds the scenario with the configured parameters, CBF gamma and initial state.
Scenario instantiate(const ScenarioConfig& config);
const RefinementSpec& refinement_for(const ScenarioConfig& config, const std::string& key);

std::uint64_t fnv1a64(const std::string& bytes);
/// Hash of everything that determines the refinement artifacts of one
/// transition; output locations do not take part.
std::string content_hash(const ScenarioConfig& config, const std::string& transition);

}  // namespace hcbf
