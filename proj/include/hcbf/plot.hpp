#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hcbf/grid.hpp"
#include "hcbf/hybrid_sim.hpp"
#include "hcbf/scenarios.hpp"

namespace hcbf {

struct LineSegment {
  double x0, y0, x1, y1;
};

/// Zero crossings of `level` over a lattice. values[i * ny + j] sits at
/// (x_lo + i dx, y_lo + j dy). Saddle cells are split by the cell average.
std::vector<LineSegment> marching_squares(std::span<const double> values, std::size_t nx, std::size_t ny,
                                          double x_lo, double x_hi, double y_lo, double y_hi, double level = 0.0);

/// A trajectory read back from CSV with the policy it came from.
struct Trace {
  std::string label;
  TrajectoryTable table;
};

struct SwitchPoint {
  std::size_t row = 0;  ///< first row of the new mode
  double t = 0.0;
  std::string from;
  std::string to;
};

std::vector<SwitchPoint> find_switches(const TrajectoryTable& table);

/// State-space plot of one run: the scenario's plane, zero contours of the
/// local and refined CBFs, the unsafe region where one is defined, the path
/// and `<circle class="switch">` markers carrying data coordinates.
std::string render_phase_svg(const Scenario& scenario, const Trace& trace,
                             const std::map<Transition, GridFn>& refined);

/// h_active over time with the switch instants marked.
std::string render_h_series_svg(const Trace& trace);

/// Several paths overlaid in the x-y workspace (Dubins).
std::string render_paths_svg(const Scenario& scenario, const std::vector<Trace>& traces);

}  // namespace hcbf
