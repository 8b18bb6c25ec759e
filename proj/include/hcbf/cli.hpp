#pragma once

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hcbf/config.hpp"
#include "hcbf/hybrid_sim.hpp"
#include "hcbf/scenarios.hpp"

namespace hcbf {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFault = 1;   ///< safety fault, failed assumption or unconverged refinement
inline constexpr int kExitConfig = 2;  ///< bad config, missing or malformed artifact

struct CommandOptions {
  std::filesystem::path config;
  std::optional<std::filesystem::path> out_dir;  ///< overrides the config's output_dir
  bool force = false;                            ///< ignore cached refinement artifacts
  std::optional<std::string> policy;             ///< restrict simulate/plot to one policy
  std::uint64_t seed = 7;                        ///< automaton validation sampling
  std::ostream* out = &std::cout;
  std::ostream* err = &std::cerr;
};

/// Loaded config plus the scenario built from it.
struct RunContext {
  std::filesystem::path config_path;
  ScenarioConfig config;
  Scenario scenario;
  std::filesystem::path out_dir;
  std::vector<Policy> policies;
};

/// Throws ConfigError when the config or the selected policy is invalid or the
/// automaton fails validation.
RunContext load_context(const CommandOptions& options);

struct ArtifactPaths {
  std::filesystem::path safe, unsafe, back_unsafe, refined;
  std::filesystem::path sidecar(const std::filesystem::path& grid) const;
};
ArtifactPaths artifact_paths(const RunContext& ctx, Transition t);

struct RefineStage {
  std::map<Transition, GridFn> refined;
  bool all_converged = true;
  int cache_hits = 0;
  int computed = 0;
};

/// Switching sets, BackUnsafe and refined CBF for every transition, reusing
/// artifacts whose sidecar hash matches unless `force`.
RefineStage refine_stage(const RunContext& ctx, bool force, std::ostream& log);

/// Refined CBFs from disk. Throws ConfigError naming the refine command when
/// one is missing or was computed for different settings.
std::map<Transition, GridFn> load_refined(const RunContext& ctx);

/// C*_q per mode: min of the refined CBFs of q's transitions, or the local
/// CBF sampled on the refinement grid when q has none.
std::map<int, GridFn> cstar_grids(const RunContext& ctx, const std::map<Transition, GridFn>& refined);
PreconditionReport check_stage(const RunContext& ctx, const std::map<Transition, GridFn>& refined);
nlohmann::json check_json(const RunContext& ctx, const PreconditionReport& report);

nlohmann::json verdict_json(const RunContext& ctx, const PolicyRun& run);
/// Writes traj_<policy>.csv and verdict_<policy>.json for every run.
std::vector<PolicyRun> simulate_stage(const RunContext& ctx, const std::map<Transition, GridFn>& refined,
                                      std::ostream& log);
/// Unsafe or faulted run.
bool run_failed(const PolicyRun& run);

/// Renders phase_<policy>.svg and h_series_<policy>.svg per trajectory, plus
/// paths.svg for the dubins scenario. Nothing is written unless every input parses.
std::vector<std::filesystem::path> plot_stage(const RunContext& ctx, std::ostream& log);

void print_summary(const RunContext& ctx, const std::vector<PolicyRun>& runs, std::ostream& os);

int cmd_refine(const CommandOptions& options);
int cmd_simulate(const CommandOptions& options);
int cmd_check(const CommandOptions& options);
int cmd_plot(const CommandOptions& options);
int cmd_pipeline(const CommandOptions& options);

/// Dispatch by subcommand name; exceptions become exit statuses.
int run_command(const std::string& name, const CommandOptions& options);

}  // namespace hcbf
