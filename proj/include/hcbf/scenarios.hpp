#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "hcbf/grid.hpp"
#include "hcbf/hybrid_model.hpp"
#include "hcbf/hybrid_sim.hpp"
#include "hcbf/reachability.hpp"
#include "hcbf/safety_filter.hpp"

namespace hcbf {

struct Friction {
  double f0 = 0.1;
  double f1 = 5.0;
  double f2 = 0.25;
  double operator()(double v) const { return f0 * v * v + f1 * v + f2; }
};

struct AccParams {
  double m = 1650.0;
  double g = 9.81;
  double v0 = 13.89;
  double v_d = 24.0;
  double T_h = 1.8;
  double c_dry = 0.3;
  double c_ice = 0.1;
  Friction fr_dry{};
  Friction fr_ice{0.04, 2.0, 0.1};
  double guard_position = 100.0;
  double k_p = 1.0;  ///< nominal speed-tracking gain [1/s]

  void validate() const;
};

/// h = d - T_h v - (v0 - v)^2 / (2 c g)
double acc_cbf(const AccParams& p, double c, const Vec& x);
Vec acc_cbf_gradient(const AccParams& p, double c, const Vec& x);

struct Obstacle {
  double x_min, x_max, y_min, y_max;
};

/// Signed distance from (x, y) to an axis-aligned box, negative inside.
double signed_distance(const Obstacle& o, double x, double y);

struct DubinsParams {
  double boundary = 5.0;  ///< surface boundary abscissa; dry for x < boundary
  Box dry_box{Vec::Constant(2, 0.0), Vec::Constant(2, 0.0)};
  Box wet_box{Vec::Constant(2, 0.0), Vec::Constant(2, 0.0)};
  std::vector<Obstacle> obstacles;
  Vec goal = Vec::Zero(2);
  double v_d = 2.0;
  double k_v = 1.0;
  double k_omega = 2.0;

  DubinsParams();
  void validate() const;
  double clearance(const Vec& x) const;
};

/// min_obs signed distance - v^2 / (2 a_max)
double dubins_cbf(const DubinsParams& p, const Box& box, const Vec& x);
Vec dubins_cbf_gradient(const DubinsParams& p, const Box& box, const Vec& x);

/// Everything the pipeline needs about one case study.
struct Scenario {
  std::string key;
  nlohmann::json params;  ///< effective parameters after defaults
  std::shared_ptr<HybridAutomaton> automaton;
  std::map<int, CbfDef> local;
  std::optional<CbfDef> global;
  std::string global_note;  ///< reason when no global CBF exists
  NominalController nominal;

  Vec x0;
  int q0 = 0;
  double horizon = 10.0;
  double sim_dt = 1e-3;

  Grid grid;            ///< default refinement grid
  ReachSettings reach;  ///< default refinement settings
  std::vector<Policy> policies;
  /// Transitions the global-intersection policy intersects; all when unset.
  std::optional<std::set<Transition>> intersection_subset;
  /// Extra runs simulated and plotted for reference but left out of reports.
  std::vector<Policy> reference_policies;

  /// Progress and safety metrics reported per policy.
  std::function<std::map<std::string, double>(const HybridTrajectory&)> metrics;
  /// Name of the metric used as "progress" in summary tables.
  std::string progress_metric;
};

/// Registered keys: "acc", "dubins", "double_integrator", "single_integrator".
std::vector<std::string> scenario_keys();
/// Builds a scenario with `params` overriding the defaults. Throws ConfigError
/// on an unknown key, an unknown parameter or violated parameter invariants.
Scenario make_scenario(const std::string& key, const nlohmann::json& params = nlohmann::json::object());

Scenario build_acc(const AccParams& params);
Scenario build_dubins(const DubinsParams& params);

/// Guard level sampled with sample_guard(); nodes where it is >= 0 are terminal
/// for the flow of the source mode.
GridFn guard_field(const HybridAutomaton& automaton, Transition t, const Grid& grid);

struct TransitionArtifacts {
  Transition transition{};
  SwitchingSets sets;
  BackUnsafeResult back_unsafe;
  RefinedCbf refined;
};

/// Switching sets, BackUnsafe and the refined CBF for one transition.
TransitionArtifacts refine_transition(const Scenario& scenario, Transition t, const Grid& grid,
                                      const ReachSettings& settings);

/// Local CBFs, the global one if any, and the refined CBFs as gridded CBFs.
CbfLibrary make_library(const Scenario& scenario, const std::map<Transition, GridFn>& refined);

struct PolicyRun {
  Policy policy = Policy::refined;
  bool applicable = true;
  std::string note;
  HybridTrajectory trajectory;
  SafetyVerdict verdict;
  std::map<std::string, double> metrics;
};

/// Runs every policy from the scenario's initial condition, concurrently.
std::vector<PolicyRun> run_comparison(const Scenario& scenario, const CbfLibrary& library,
                                      const std::vector<Policy>& policies, const SimOptions& options = {});

}  // namespace hcbf
