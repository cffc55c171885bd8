#include "vwave/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vwave {

namespace {

std::ptrdiff_t wrap(std::ptrdiff_t j, std::ptrdiff_t n) {
  const std::ptrdiff_t r = j % n;
  return r < 0 ? r + n : r;
}

void check_length(std::span<const double> g, std::size_t expected) {
  if (g.size() != expected) {
    throw std::invalid_argument("grid function has " +
                                std::to_string(g.size()) +
                                " entries, grid expects " +
                                std::to_string(expected));
  }
}

}  // namespace

std::vector<double> GridSpec1D::nodes() const {
  std::vector<double> xs(size());
  for (std::size_t j = 0; j < xs.size(); ++j) {
    xs[j] = x(static_cast<std::ptrdiff_t>(j));
  }
  return xs;
}

void GridSpec1D::validate() const {
  if (!(std::isfinite(x_min) && std::isfinite(x_max) && x_max > x_min)) {
    throw std::invalid_argument("GridSpec1D: need finite x_min < x_max");
  }
  if (n_cells < 1) {
    throw std::invalid_argument("GridSpec1D: n_cells must be >= 1");
  }
}

std::size_t GridSpec2D::index(std::ptrdiff_t i, std::ptrdiff_t j) const {
  return static_cast<std::size_t>(wrap(i, nx) * ny + wrap(j, ny));
}

void GridSpec2D::validate() const {
  if (!(x_max > x_min && y_max > y_min)) {
    throw std::invalid_argument("GridSpec2D: need x_min < x_max, y_min < y_max");
  }
  if (nx < 1 || ny < 1) {
    throw std::invalid_argument("GridSpec2D: nx, ny must be >= 1");
  }
}

double node_value(std::span<const double> g, const GridSpec1D& grid,
                  std::ptrdiff_t j, std::optional<Ghosts> ghosts) {
  const auto n = static_cast<std::ptrdiff_t>(grid.n_cells);
  check_length(g, grid.size());
  if (j >= 0 && j < n) return g[static_cast<std::size_t>(j)];
  if (grid.boundary == Boundary::periodic) {
    return g[static_cast<std::size_t>(wrap(j, n))];
  }
  if (!ghosts) {
    throw std::out_of_range("node index " + std::to_string(j) +
                            " outside a fixed_value grid with no ghosts");
  }
  return j < 0 ? ghosts->left : ghosts->right;
}

double iface_avg(std::span<const double> g, const GridSpec1D& grid, Side side,
                 std::ptrdiff_t j, std::optional<Ghosts> ghosts) {
  const std::ptrdiff_t left = side == Side::plus ? j : j - 1;
  return 0.5 * (node_value(g, grid, left, ghosts) +
                node_value(g, grid, left + 1, ghosts));
}

double iface_jump(std::span<const double> g, const GridSpec1D& grid, Side side,
                  std::ptrdiff_t j, std::optional<Ghosts> ghosts) {
  const std::ptrdiff_t left = side == Side::plus ? j : j - 1;
  return node_value(g, grid, left + 1, ghosts) -
         node_value(g, grid, left, ghosts);
}

double central_diff(std::span<const double> g, const GridSpec1D& grid,
                    std::ptrdiff_t j, std::optional<Ghosts> ghosts) {
  return (node_value(g, grid, j + 1, ghosts) -
          node_value(g, grid, j - 1, ghosts)) /
         (2.0 * grid.dx());
}

std::vector<double> padded(std::span<const double> g, const GridSpec1D& grid,
                           std::size_t width, std::optional<Ghosts> ghosts) {
  check_length(g, grid.size());
  const std::size_t n = grid.size();
  std::vector<double> out(n + 2 * width);
  for (std::size_t j = 0; j < n; ++j) out[j + width] = g[j];
  const auto w = static_cast<std::ptrdiff_t>(width);
  for (std::ptrdiff_t k = 1; k <= w; ++k) {
    out[static_cast<std::size_t>(w - k)] = node_value(g, grid, -k, ghosts);
    out[n + width + static_cast<std::size_t>(k - 1)] = node_value(
        g, grid, static_cast<std::ptrdiff_t>(n) + k - 1, ghosts);
  }
  return out;
}

GridFn central_diff_all(std::span<const double> g, const GridSpec1D& grid,
                        std::optional<Ghosts> ghosts) {
  const auto p = padded(g, grid, 1, ghosts);
  const double inv = 1.0 / (2.0 * grid.dx());
  GridFn out(grid.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = (p[j + 2] - p[j]) * inv;
  }
  return out;
}

double node_value_2d(std::span<const double> g, const GridSpec2D& grid,
                     std::ptrdiff_t i, std::ptrdiff_t j) {
  check_length(g, grid.size());
  return g[grid.index(i, j)];
}

double iface_avg_2d(std::span<const double> g, const GridSpec2D& grid,
                    Axis axis, Side side, std::ptrdiff_t i, std::ptrdiff_t j) {
  const std::ptrdiff_t shift = side == Side::plus ? 0 : -1;
  if (axis == Axis::x) {
    return 0.5 * (node_value_2d(g, grid, i + shift, j) +
                  node_value_2d(g, grid, i + shift + 1, j));
  }
  return 0.5 * (node_value_2d(g, grid, i, j + shift) +
                node_value_2d(g, grid, i, j + shift + 1));
}

double iface_jump_2d(std::span<const double> g, const GridSpec2D& grid,
                     Axis axis, Side side, std::ptrdiff_t i,
                     std::ptrdiff_t j) {
  const std::ptrdiff_t shift = side == Side::plus ? 0 : -1;
  if (axis == Axis::x) {
    return node_value_2d(g, grid, i + shift + 1, j) -
           node_value_2d(g, grid, i + shift, j);
  }
  return node_value_2d(g, grid, i, j + shift + 1) -
         node_value_2d(g, grid, i, j + shift);
}

double central_diff_2d(std::span<const double> g, const GridSpec2D& grid,
                       Axis axis, std::ptrdiff_t i, std::ptrdiff_t j) {
  if (axis == Axis::x) {
    return (node_value_2d(g, grid, i + 1, j) -
            node_value_2d(g, grid, i - 1, j)) /
           (2.0 * grid.dx());
  }
  return (node_value_2d(g, grid, i, j + 1) - node_value_2d(g, grid, i, j - 1)) /
         (2.0 * grid.dy());
}

double sum(std::span<const double> a) {
  double s = 0.0;
  for (double x : a) s += x;
  return s;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dot: length mismatch");
  }
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double max_value(std::span<const double> a) {
  if (a.empty()) throw std::invalid_argument("max_value: empty input");
  double m = a[0];
  for (double x : a) m = x > m ? x : m;
  return m;
}

bool all_finite(std::span<const double> a) {
  for (double x : a) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace vwave
