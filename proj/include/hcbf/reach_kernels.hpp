#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hcbf/grid.hpp"
#include "hcbf/hybrid_model.hpp"

namespace hcbf {

enum class Exec { serial, parallel };

/// For every (node, sampled control) pair, the cell location of the
/// one-step-advected point x + dt * F_q(x, u). The advected points never
/// change between sweeps, so they are located once per solve.
struct AdvectionTable {
  int ndim = 0;
  std::size_t nodes = 0;
  std::size_t controls = 0;
  std::vector<CellLocation> cells;  ///< nodes * controls, node-major
  std::vector<std::size_t> corners;
  double max_step = 0.0;  ///< max over (x, u) of |F_q(x, u)| * dt
};

/// Throws DynamicsError if the flow is non-finite at any node.
AdvectionTable build_advection_table(const Grid& grid, const HybridAutomaton& automaton, int q,
                                     std::span<const Vec> controls, double dt, Exec exec = Exec::parallel);

/// One Jacobi sweep of the semi-Lagrangian operator
///
///   next[k] = cap[k]                                   if absorbing[k]
///   next[k] = min(cap[k], shape(max_u prev(x_k^+)))    otherwise
///
/// with shape(m) = m for m >= 0 and negative_scale * m below zero.
/// Returns max_k |next[k] - prev[k]|. `absorbing` may be empty.
double sweep_serial(const AdvectionTable& table, std::span<const double> cap,
                    std::span<const std::uint8_t> absorbing, double negative_scale, std::span<const double> prev,
                    std::span<double> next);

/// OpenMP version of sweep_serial(); results are bit-identical for any thread count.
double sweep_parallel(const AdvectionTable& table, std::span<const double> cap,
                      std::span<const std::uint8_t> absorbing, double negative_scale,
                      std::span<const double> prev, std::span<double> next);

inline double sweep(Exec exec, const AdvectionTable& table, std::span<const double> cap,
                    std::span<const std::uint8_t> absorbing, double negative_scale, std::span<const double> prev,
                    std::span<double> next) {
  return exec == Exec::serial ? sweep_serial(table, cap, absorbing, negative_scale, prev, next)
                              : sweep_parallel(table, cap, absorbing, negative_scale, prev, next);
}

/// Caps OpenMP threads from HCBF_THREADS when set. Returns the thread count in effect.
int configure_threads_from_env();

}  // namespace hcbf
