#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcbf/grid.hpp"
#include "hcbf/hybrid_model.hpp"
#include "hcbf/safety_filter.hpp"

namespace hcbf {

struct ControlDecision {
  Vec u;
  double h_active = 0.0;
  bool feasible = true;
};

/// Evaluated once per integration step (zero-order hold).
using Controller = std::function<ControlDecision(int q, double t, const Vec& x)>;

Controller make_controller(const SwitchingLaw& law);

struct SimOptions {
  double dt = 1e-3;
  int max_switches = 10000;
  bool stop_on_safety_fault = false;
  double guard_tol = 1e-9;
  int max_bisection_steps = 60;
};

enum class Termination { horizon, no_successor, safety_fault, integration_fault, domain_exit, zeno };
std::string to_string(Termination t);

struct Sample {
  double t = 0.0;
  Vec x;
  Vec u;
  double h = 0.0;
};

/// One flow interval (q_i, phi_i, delta_i).
struct Segment {
  int mode = 0;
  double t_in = 0.0;
  double dwell = 0.0;
  std::vector<Sample> samples;
};

struct SegmentExit {
  enum class Kind { guard_hit, horizon, fault };
  Kind kind = Kind::horizon;
  int next_mode = -1;
  double t = 0.0;
  Vec x;
  Termination fault = Termination::horizon;
  std::string message;
};

struct SegmentRun {
  Segment segment;
  SegmentExit exit;
  int infeasible_steps = 0;
  double first_fault_time = -1.0;
};

/// Fixed-step RK4 in mode q from (x0, t0) until t_max or the first guard
/// crossing, localised by bisection on the held-input flow. The earliest
/// crossing among outgoing guards wins.
SegmentRun integrate_segment(const HybridAutomaton& automaton, int q, const Controller& controller, const Vec& x0,
                             double t0, double t_max, const SimOptions& options = {});

struct HybridTrajectory {
  std::vector<Segment> segments;
  Termination reason = Termination::horizon;
  std::string message;
  int infeasible_steps = 0;
  double first_fault_time = -1.0;  ///< time of the first infeasible filter solve, -1 if none
};

/// Chains segments across guard crossings. Throws DeterminismError when more
/// than one guard holds at a crossing point.
HybridTrajectory run_hybrid(const HybridAutomaton& automaton, const Controller& controller, const Vec& x0, int q0,
                            double horizon, const SimOptions& options = {});

/// `t,mode,x0..x{n-1},u0..u{m-1},h_active`; switch instants appear twice
/// (last row of the old mode, first row of the new one).
void write_trajectory_csv(std::ostream& os, const HybridTrajectory& traj, const HybridAutomaton& automaton);

struct CsvRow {
  double t = 0.0;
  std::string mode;
  Vec x;
  Vec u;
  double h = 0.0;
};

struct TrajectoryTable {
  std::vector<std::string> header;
  int state_dim = 0;
  int input_dim = 0;
  std::vector<CsvRow> rows;
};

/// Throws FormatError on an empty or malformed file.
TrajectoryTable read_trajectory_csv(std::istream& is);

struct SwitchRecord {
  double t = 0.0;
  int from = 0;
  int to = 0;
  Vec x;
  double h_from = 0.0;
  double h_to = 0.0;
  bool in_safe_set = false;
  bool in_unsafe_set = false;
};

struct Violation {
  double t = 0.0;
  int mode = 0;
  Vec x;
  double h = 0.0;
};

struct SafetyVerdict {
  std::vector<double> segment_min;
  bool safe = true;
  std::optional<Violation> first_violation;
  std::vector<SwitchRecord> switches;
};

/// Violation tolerance: 1e-3 for analytic CBFs, one cell diagonal for gridded ones.
double default_violation_tol(const CbfDef& cbf);

/// Largest |u_k - u_{k-1}|_inf between consecutive samples of one segment.
/// A jump here flags a nonsmooth point of the filtered controller.
double max_control_increment(const HybridTrajectory& traj);

/// Checks each segment against its mode's local safe set and classifies each
/// switch state as in S_{q,q'} or U_{q,q'}.
SafetyVerdict check_pairwise_safety(const HybridTrajectory& traj, const HybridAutomaton& automaton,
                                    const std::map<int, CbfDef>& local_cbfs);

struct AssumptionResult {
  bool pass = true;
  std::string detail;
  std::vector<Vec> witnesses;
};

struct PreconditionReport {
  AssumptionResult initial_in_safe_set;     ///< x0 in C*_{q0}, C*_{q0} nonempty
  AssumptionResult safe_switch_reachable;   ///< C*_q ∩ C*_q' ∩ Guard nonempty, or C*_q ∩ Guard empty
  AssumptionResult control_set_nonempty;    ///< K*_q(x) nonempty on C*_q
  bool all_pass() const {
    return initial_in_safe_set.pass && safe_switch_reachable.pass && control_set_nonempty.pass;
  }
};

using ControlSetBuilder = std::function<ControlSet(int q, const Vec& x)>;

/// Sufficient conditions for global safety under a K*-respecting switching
/// law. `cstar` holds C*_q sampled on a grid per mode.
PreconditionReport check_switching_preconditions(const HybridAutomaton& automaton, const std::map<int, GridFn>& cstar,
                                    const ControlSetBuilder& kstar,
                                    const std::vector<std::pair<int, Vec>>& initial_states);

}  // namespace hcbf
