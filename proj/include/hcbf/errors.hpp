#pragma once

#include <stdexcept>
#include <string>

namespace hcbf {

/// Invalid scenario, settings or automaton construction.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed on-disk artifact (grid file, trajectory CSV, ...).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mode dynamics produced a non-finite value.
class DynamicsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two guards fire at the same crossing point.
class DeterminismError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grids that must match do not.
class GridMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hcbf
