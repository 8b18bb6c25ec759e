#pragma once

#include <functional>
#include <vector>

#include "hcbf/grid.hpp"
#include "hcbf/hybrid_model.hpp"
#include "hcbf/reach_kernels.hpp"

namespace hcbf {

struct ReachSettings {
  double dt = 0.05;            ///< semi-Lagrangian step [s]
  double gamma = 1.0;          ///< linear class-K coefficient [1/s]
  int control_samples = 3;     ///< lattice points per input dimension (corners always included)
  double convergence_tol = 1e-6;
  int max_iters = 5000;
  Exec exec = Exec::parallel;
  /// Called after every sweep with the new iterate. Test hook; not part of the cache key.
  std::function<void(int, const std::vector<double>&)> on_iteration;

  /// Throws ConfigError on out-of-range fields.
  void validate() const;
};

/// Uniform per-dimension lattice over the box, endpoints included.
std::vector<Vec> control_lattice(const Box& box, int samples_per_dim);

struct ReachDiagnostics {
  int iterations = 0;
  bool converged = false;
  double residual = 0.0;
  /// max |F| dt over sampled (x, u) relative to one cell diagonal; > 1 violates the CFL bound.
  double cfl_ratio = 0.0;
  bool cfl_ok() const { return cfl_ratio <= 1.0; }
};

struct BackUnsafeResult {
  GridFn level;  ///< >= 0 inside BackUnsafe (the negated avoid value)
  ReachDiagnostics diag;
};

/// Avoid-value iteration W = min(-U, max_u W(x + dt F)); BackUnsafe = {W < 0}.
///
/// Nodes where `absorbing` (a level function on the same grid) is >= 0 are
/// terminal: the guard fires there, so the flow of mode q does not continue
/// and W is held at -U. The other nodes then start from -U but are not capped
/// by it, since U can only be entered through a terminal node.
BackUnsafeResult compute_back_unsafe(const HybridAutomaton& automaton, int q, const GridFn& unsafe_switch,
                                     const ReachSettings& settings, const GridFn* absorbing = nullptr);

struct RefinedCbf {
  Transition transition{};
  GridFn value;
  double gamma = 0.0;
  int iterations = 0;
  bool converged = false;
  double residual = 0.0;
  bool no_safe_switching = false;  ///< refined safe set is empty on the grid
  double cfl_ratio = 0.0;
};

/// Refines h_q against BackUnsafe by value iteration on the constraint
/// l = min(h_q, -back_unsafe):
///
///   V <- min(l, shape(max_u V(x + dt F))),  shape(m) = m (m >= 0), (1 - gamma dt) m (m < 0)
///
/// The zero superlevel set converges to the discrete viability kernel of {l >= 0}.
RefinedCbf refine_cbf(const HybridAutomaton& automaton, int q, int q_next, const ImplicitSet& h_init,
                      const GridFn& back_unsafe, const ReachSettings& settings, const GridFn* absorbing = nullptr);

struct ValidityReport {
  std::size_t checked = 0;
  std::size_t satisfied = 0;
  std::vector<std::size_t> failing_nodes;  ///< first few violations
  double fraction() const { return checked == 0 ? 1.0 : static_cast<double>(satisfied) / checked; }
};

/// Discrete CBF condition at interior, non-absorbing nodes with V >= 0:
/// some sampled u has V(x + dt F) >= (1 - gamma dt) V(x) - tol.
ValidityReport check_refinement_validity(const HybridAutomaton& automaton, int q, const RefinedCbf& refined,
                                         const ReachSettings& settings, const GridFn* absorbing = nullptr);

}  // namespace hcbf
