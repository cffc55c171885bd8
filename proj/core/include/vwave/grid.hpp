#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace vwave {

enum class Boundary { periodic, fixed_value };

/// Side of a node at which an interface quantity is taken: plus is j+1/2,
/// minus is j-1/2.
enum class Side { plus, minus };

enum class Axis { x, y };

using GridFn = std::vector<double>;

/// Values seen outside a fixed_value grid. Every ghost node to the left of
/// the domain holds `left`, every ghost node to the right holds `right`.
struct Ghosts {
  double left = 0.0;
  double right = 0.0;
};

/// Uniform 1D grid. Node j sits at x_min + j*dx for j in [0, n_cells).
struct GridSpec1D {
  double x_min = 0.0;
  double x_max = 1.0;
  int n_cells = 1;
  Boundary boundary = Boundary::periodic;

  [[nodiscard]] double dx() const { return (x_max - x_min) / n_cells; }
  [[nodiscard]] double x(std::ptrdiff_t j) const {
    return x_min + static_cast<double>(j) * dx();
  }
  [[nodiscard]] std::size_t size() const {
    return static_cast<std::size_t>(n_cells);
  }
  [[nodiscard]] std::vector<double> nodes() const;

  /// Throws std::invalid_argument when the invariants are violated.
  void validate() const;
};

/// Uniform, periodic 2D grid. Node (i, j) sits at (x_min + i*dx, y_min + j*dy);
/// grid functions are stored with i (the x index) as the slow index.
struct GridSpec2D {
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;
  int nx = 1;
  int ny = 1;

  [[nodiscard]] double dx() const { return (x_max - x_min) / nx; }
  [[nodiscard]] double dy() const { return (y_max - y_min) / ny; }
  [[nodiscard]] double x(std::ptrdiff_t i) const {
    return x_min + static_cast<double>(i) * dx();
  }
  [[nodiscard]] double y(std::ptrdiff_t j) const {
    return y_min + static_cast<double>(j) * dy();
  }
  [[nodiscard]] std::size_t size() const {
    return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
  }
  [[nodiscard]] std::size_t index(std::ptrdiff_t i, std::ptrdiff_t j) const;

  void validate() const;
};

// ---------------------------------------------------------------------------
// Closure and interface operators (1D)
//
// These take a node index and a side instead of materialising half-integer
// interfaces. Periodic grids wrap indices; fixed_value grids read ghosts,
// which must then be supplied.
// ---------------------------------------------------------------------------

/// Value of g at node j with the grid's boundary closure applied.
[[nodiscard]] double node_value(std::span<const double> g,
                                const GridSpec1D& grid, std::ptrdiff_t j,
                                std::optional<Ghosts> ghosts = std::nullopt);

[[nodiscard]] double iface_avg(std::span<const double> g,
                               const GridSpec1D& grid, Side side,
                               std::ptrdiff_t j,
                               std::optional<Ghosts> ghosts = std::nullopt);

[[nodiscard]] double iface_jump(std::span<const double> g,
                                const GridSpec1D& grid, Side side,
                                std::ptrdiff_t j,
                                std::optional<Ghosts> ghosts = std::nullopt);

/// (g_{j+1} - g_{j-1}) / (2 dx).
[[nodiscard]] double central_diff(std::span<const double> g,
                                  const GridSpec1D& grid, std::ptrdiff_t j,
                                  std::optional<Ghosts> ghosts = std::nullopt);

/// Copy of g extended by `width` closure nodes on each side, so that
/// padded[j + width] == node_value(g, grid, j) for j in [-width, n + width).
[[nodiscard]] std::vector<double> padded(std::span<const double> g,
                                         const GridSpec1D& grid,
                                         std::size_t width,
                                         std::optional<Ghosts> ghosts =
                                             std::nullopt);

/// D0 applied at every node.
[[nodiscard]] GridFn central_diff_all(std::span<const double> g,
                                      const GridSpec1D& grid,
                                      std::optional<Ghosts> ghosts =
                                          std::nullopt);

// ---------------------------------------------------------------------------
// 2D (periodic)
// ---------------------------------------------------------------------------

[[nodiscard]] double node_value_2d(std::span<const double> g,
                                   const GridSpec2D& grid, std::ptrdiff_t i,
                                   std::ptrdiff_t j);

[[nodiscard]] double iface_avg_2d(std::span<const double> g,
                                  const GridSpec2D& grid, Axis axis, Side side,
                                  std::ptrdiff_t i, std::ptrdiff_t j);

[[nodiscard]] double iface_jump_2d(std::span<const double> g,
                                   const GridSpec2D& grid, Axis axis,
                                   Side side, std::ptrdiff_t i,
                                   std::ptrdiff_t j);

[[nodiscard]] double central_diff_2d(std::span<const double> g,
                                     const GridSpec2D& grid, Axis axis,
                                     std::ptrdiff_t i, std::ptrdiff_t j);

// ---------------------------------------------------------------------------
// Reductions. Always a single left-to-right pass, so results do not depend
// on how pointwise work was scheduled.
// ---------------------------------------------------------------------------

[[nodiscard]] double sum(std::span<const double> a);
[[nodiscard]] double dot(std::span<const double> a, std::span<const double> b);
[[nodiscard]] double max_value(std::span<const double> a);
[[nodiscard]] bool all_finite(std::span<const double> a);

}  // namespace vwave
