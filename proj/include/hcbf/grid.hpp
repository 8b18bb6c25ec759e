#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "hcbf/hybrid_model.hpp"

namespace hcbf {

inline constexpr int kMaxGridDims = 6;

/// Rectangular node grid. Node k of dimension d sits at lower + k * spacing(d).
///
/// A periodic axis stores both endpoints; the node at `upper` is the same
/// physical point as the node at `lower` and queries wrap modulo the period.
class Grid {
 public:
  struct Axis {
    std::size_t count = 0;
    double lower = 0.0;
    double upper = 0.0;
    bool periodic = false;
  };

  Grid() = default;
  explicit Grid(std::vector<Axis> axes);

  int ndim() const { return static_cast<int>(axes_.size()); }
  const Axis& axis(int d) const { return axes_[static_cast<std::size_t>(d)]; }
  const std::vector<Axis>& axes() const { return axes_; }
  double spacing(int d) const { return spacing_[static_cast<std::size_t>(d)]; }
  std::size_t stride(int d) const { return strides_[static_cast<std::size_t>(d)]; }
  std::size_t size() const { return size_; }
  double cell_diagonal() const;
  /// Offsets of the 2^n cell corners relative to a cell's lower corner.
  std::span<const std::size_t> corners() const { return corners_; }

  Vec node(std::size_t k) const;
  std::array<std::size_t, kMaxGridDims> multi_index(std::size_t k) const;
  /// True when the node touches a non-periodic edge of the box.
  bool on_boundary(std::size_t k) const;

  /// Same axes exactly (counts, bounds and periodicity).
  bool same_as(const Grid& other) const;

 private:
  std::vector<Axis> axes_;
  std::vector<double> spacing_;
  std::vector<std::size_t> strides_;
  std::vector<std::size_t> corners_;
  std::size_t size_ = 0;
};

/// Where a query point falls: the lower corner of its cell, the fractional
/// offsets inside that cell, and the distance from the query to the box.
struct CellLocation {
  std::size_t base = 0;
  std::array<double, kMaxGridDims> frac{};
  double outside_distance = 0.0;
};

CellLocation locate(const Grid& grid, const Vec& x);
/// Offsets (relative to `base`) of the 2^n cell corners; bit d of the corner
/// index selects the upper neighbour along dimension d.
std::vector<std::size_t> corner_offsets(const Grid& grid);

/// Scalar field sampled at grid nodes, row-major (last dimension fastest).
struct GridFn {
  Grid grid;
  std::vector<double> values;

  GridFn() = default;
  GridFn(Grid g, std::vector<double> v);
};

/// Multilinear interpolation. Outside the box: value at the clamped point
/// minus the Euclidean distance to the box.
double interpolate(const GridFn& f, const Vec& x);
/// Same as interpolate() for a precomputed location.
double interpolate_at(std::span<const double> values, std::span<const std::size_t> corners, int ndim,
                      const CellLocation& loc);

/// Central differences of the interpolated field with step = grid spacing;
/// one-sided where the stencil would leave a non-periodic axis.
Vec gradient(const GridFn& f, const Vec& x);

struct OneSidedSlopes {
  Vec minus;  ///< backward partial derivatives
  Vec plus;   ///< forward partial derivatives
};

/// One-sided partial derivatives of the interpolant, exact inside the box:
/// the interpolant is linear along each axis between cell faces, so the
/// differences are taken up to the nearest face. On a non-periodic edge the
/// missing side copies the other. Outside the box both equal gradient().
OneSidedSlopes one_sided_slopes(const GridFn& f, const Vec& x);

GridFn pointwise_min(const GridFn& a, const GridFn& b);
GridFn pointwise_max(const GridFn& a, const GridFn& b);
GridFn negate(const GridFn& a);

/// Throws ConfigError naming the node on a non-finite sample.
GridFn sample_to_grid(const std::function<double(const Vec&)>& level, const Grid& grid);

/// A set {x : level(x) >= 0} with an analytic or gridded level function.
class ImplicitSet {
 public:
  using Analytic = std::function<double(const Vec&)>;

  ImplicitSet() = default;
  ImplicitSet(Analytic fn) : level_(std::move(fn)) {}  // NOLINT(google-explicit-constructor)
  ImplicitSet(std::shared_ptr<const GridFn> fn) : level_(std::move(fn)) {}  // NOLINT

  double operator()(const Vec& x) const;
  bool contains(const Vec& x) const { return (*this)(x) >= 0.0; }
  bool is_gridded() const { return std::holds_alternative<std::shared_ptr<const GridFn>>(level_); }
  const GridFn* grid_fn() const;
  GridFn sample(const Grid& grid) const;

 private:
  std::variant<Analytic, std::shared_ptr<const GridFn>> level_;
};

/// Guard level on the grid. Each node takes the largest level over itself and
/// its half-cell neighbours along every axis, so a node belongs to the guard
/// whenever the guard passes within half a cell of it.
GridFn sample_guard(const GuardDef& guard, const Grid& grid);
/// Level of `set` on the grid, each node taking the smallest value over the
/// same half-cell neighbourhood: a node is inside only if its neighbourhood is.
GridFn sample_inner(const ImplicitSet& set, const Grid& grid);

struct SwitchingSets {
  GridFn safe;    ///< Guard ∩ C_q ∩ C_q'
  GridFn unsafe;  ///< (Guard ∩ C_q) \ C_q'
};

/// Guard from sample_guard(), C_q' from sample_inner(). On guard nodes the
/// guard factor is left out of both levels.

SwitchingSets switching_sets(const HybridAutomaton& automaton, int q, int q_next, const ImplicitSet& cbf_q,
                             const ImplicitSet& cbf_next, const Grid& grid);

/// Binary ".hcbf" grid file, little-endian: "HCBF", u32 version, u32 ndim,
/// per axis {u32 count, f64 lower, f64 upper}, then f64 values row-major.
/// Periodicity is not stored; reapply it with with_periodic_axes().
void save_grid(const GridFn& f, const std::filesystem::path& path);
GridFn load_grid(const std::filesystem::path& path);
GridFn with_periodic_axes(GridFn f, const std::vector<bool>& periodic);

inline constexpr std::uint32_t kGridFormatVersion = 1;

}  // namespace hcbf
