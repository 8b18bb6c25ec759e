#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hcbf/grid.hpp"
#include "hcbf/hybrid_model.hpp"
#include "hcbf/qp.hpp"

namespace hcbf {

/// A control barrier function h with alpha(h) = gamma * h.
struct CbfDef {
  std::string name;
  ImplicitSet value;
  std::function<Vec(const Vec&)> analytic_gradient;  ///< empty for gridded CBFs
  double gamma = 1.0;

  static CbfDef analytic(std::string name, std::function<double(const Vec&)> h,
                         std::function<Vec(const Vec&)> grad, double gamma = 1.0);
  static CbfDef gridded(std::string name, std::shared_ptr<const GridFn> h, double gamma = 1.0);

  double operator()(const Vec& x) const { return value(x); }
  Vec gradient(const Vec& x) const;
  /// Backward and forward partial derivatives; both equal gradient() for analytic CBFs.
  OneSidedSlopes slopes(const Vec& x) const;
  bool is_gridded() const { return value.is_gridded(); }
};

/// grad h(x)^T (f + g u) + gamma h(x) >= 0 written as a . u >= b.
/// Throws DynamicsError on a non-finite gradient.
HalfspaceConstraint build_constraint(const CbfDef& cbf, const ModeDef& mode, const Vec& x);

/// K*_q: the intersection of per-successor safe control sets is the
/// concatenation of their halfspaces.
std::vector<HalfspaceConstraint> safe_control_set_intersection(
    const std::vector<std::vector<HalfspaceConstraint>>& per_successor);

/// A union of polyhedra in input space: u is admissible when it satisfies
/// every constraint of at least one piece.
struct ControlSet {
  std::vector<std::vector<HalfspaceConstraint>> pieces;
};

/// {u : dh/dt(x, u) + gamma h(x) >= 0} for every CBF in `cbfs`.
///
/// dh/dt is the one-sided directional derivative of h along F = f + g u.
/// Gridded CBFs are kinked on cell faces, where that derivative depends on the
/// sign of each component of F. For a fixed sign pattern of the
/// input-dependent components it is linear in u, so the set splits into one
/// piece per pattern, each carrying its sign constraints. Without kinks along
/// input-dependent components the result is a single piece of halfspaces,
/// identical to build_constraint() for analytic CBFs.
ControlSet safe_control_set(const std::vector<const CbfDef*>& cbfs, const ModeDef& mode, const Vec& x);

/// filter_qp() on every piece, keeping the feasible result closest to u_nom.
/// With no feasible piece the least-infeasible result is returned. An empty
/// set means no constraints.
FilterResult filter_control_set(const Vec& u_nom, const ControlSet& set, const Box& box);

/// Number of grid nodes near {h = 0} (|h| below half a cell diagonal) where
/// |grad h| < threshold. Nonzero means the boundary-gradient hypothesis of the
/// invariance argument fails there.
std::size_t count_flat_boundary_nodes(const CbfDef& cbf, const Grid& grid, double threshold = 1e-6);

enum class Policy { refined, global_intersection, switch_unaware, global_cbf, nominal };

std::string to_string(Policy p);
/// Accepts "refined", "global-intersection", "switch-unaware", "global-cbf", "nominal".
Policy parse_policy(const std::string& name);

struct CbfLibrary {
  std::map<int, CbfDef> local;
  std::map<Transition, CbfDef> refined;
  std::optional<CbfDef> global;
  /// Next mode used by the refined policy when a mode has several successors.
  std::map<int, int> planned_next;
  /// Restricts the global-intersection policy to these transitions when set.
  std::optional<std::set<Transition>> intersection_subset;
};

using NominalController = std::function<Vec(int q, double t, const Vec& x)>;

/// k : Q x X -> U. Builds the policy's CBF constraints for the current mode
/// and projects the nominal input onto them.
class SwitchingLaw {
 public:
  SwitchingLaw(const HybridAutomaton& automaton, CbfLibrary library, Policy policy, NominalController nominal);

  /// CBFs enforced in mode q. Throws ConfigError when one the policy needs is missing.
  std::vector<const CbfDef*> active_cbfs(int q) const;
  /// K*_q(x) for the policy; empty under the nominal policy.
  ControlSet control_set(int q, const Vec& x) const;
  FilterResult operator()(int q, double t, const Vec& x) const;
  /// Smallest active CBF value at x (local h_q under the nominal policy).
  double active_value(int q, const Vec& x) const;

  Policy policy() const { return policy_; }
  const CbfLibrary& library() const { return library_; }
  const HybridAutomaton& automaton() const { return *automaton_; }

 private:
  const HybridAutomaton* automaton_;
  CbfLibrary library_;
  Policy policy_;
  NominalController nominal_;
};

}  // namespace hcbf
