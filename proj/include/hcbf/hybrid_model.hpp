#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace hcbf {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Axis-aligned box [lower, upper]. Used for control sets and mode domains.
struct Box {
  Vec lower;
  Vec upper;

  int dim() const { return static_cast<int>(lower.size()); }
  bool empty() const;
  bool contains(const Vec& x, double tol = 0.0) const;
  Vec clamp(const Vec& x) const;
  Vec center() const { return 0.5 * (lower + upper); }
};

/// One flow mode: xdot = drift(x) + input_matrix(x) u, u in control_box.
struct ModeDef {
  std::string name;
  std::function<Vec(const Vec&)> drift;
  std::function<Mat(const Vec&)> input_matrix;
  Box control_box;
  Box domain;
};

/// Guard(q, q'). The set is {x : level_fn(x) >= 0}; predicate defaults to that.
struct GuardDef {
  std::function<double(const Vec&)> level_fn;
  std::function<bool(const Vec&)> predicate;

  bool contains(const Vec& x) const;
};

using Transition = std::pair<int, int>;

/// Hybrid input automaton with control-affine flows and urgent guards.
///
/// Built once through add_mode/add_guard and treated as immutable afterwards;
/// every callable it holds must be pure so the automaton can be shared across
/// threads.
class HybridAutomaton {
 public:
  HybridAutomaton(int state_dim, int input_dim);

  int add_mode(ModeDef mode);
  /// Throws ConfigError unless both indices exist and differ.
  void add_guard(int from, int to, GuardDef guard);

  int state_dim() const { return state_dim_; }
  int input_dim() const { return input_dim_; }
  int mode_count() const { return static_cast<int>(modes_.size()); }
  const ModeDef& mode(int q) const;
  const std::vector<ModeDef>& modes() const { return modes_; }
  const std::map<Transition, GuardDef>& guards() const { return guards_; }
  const GuardDef& guard(int from, int to) const;
  std::optional<int> mode_index(const std::string& name) const;
  /// Modes reachable from q through a registered guard, ascending.
  std::vector<int> successors(int q) const;

 private:
  int state_dim_;
  int input_dim_;
  std::vector<ModeDef> modes_;
  std::map<Transition, GuardDef> guards_;
};

struct FlowEval {
  Vec xdot;
  bool input_clamped = false;
};

/// f_q(x) + g_q(x) u, with u clamped into the mode's control box.
/// Throws DynamicsError on a non-finite result.
FlowEval eval_flow(const HybridAutomaton& automaton, int q, const Vec& x, const Vec& u);

/// Registered (q, q') pairs; a superset of the transitions any controller can realise.
std::set<Transition> transitions(const HybridAutomaton& automaton);
std::set<std::pair<std::string, std::string>> transition_names(const HybridAutomaton& automaton);

struct ValidationIssue {
  std::string message;
  std::optional<Vec> witness;
};

/// Empty result means the automaton is well formed. Guard predicate/level
/// agreement is checked on `samples` uniform points of the source mode domain.
std::vector<ValidationIssue> validate_automaton(const HybridAutomaton& automaton, int samples = 1000,
                                                std::uint64_t seed = 7);

}  // namespace hcbf
