#pragma once

#include <span>
#include <vector>

#include "hcbf/hybrid_model.hpp"

namespace hcbf {

/// a . u >= b
struct HalfspaceConstraint {
  Vec a;
  double b = 0.0;
};

/// Result of the minimally invasive projection.
///
/// Row indexing used by `active_constraints` and `multipliers`: indices
/// [0, K) are the caller's constraints, K + 2i is the lower box bound of
/// input i and K + 2i + 1 its upper bound.
struct FilterResult {
  Vec u;
  bool feasible = false;
  std::vector<int> active_constraints;
  bool nominal_unchanged = false;
  Vec multipliers;
  /// Stationarity residual |(u - u_nom) - sum_j lambda_j n_j|_inf.
  double kkt_residual = 0.0;
};

/// argmin |u - u_nom|^2  s.t.  constraints, box.
///
/// Dense dual active-set solve, intended for a handful of inputs and
/// constraints. When the constraints cannot all hold inside the box the
/// result has feasible = false and u is the point of the box minimising the
/// largest violation (closest to u_nom among such points).
FilterResult filter_qp(const Vec& u_nom, std::span<const HalfspaceConstraint> constraints, const Box& box);

/// Largest violation max_j (b_j - a_j . u), clipped at zero.
double max_violation(std::span<const HalfspaceConstraint> constraints, const Vec& u);

}  // namespace hcbf
