#include "vwave/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vwave {

GridSpec1D ProblemSpec1D::grid(int n_cells) const {
  GridSpec1D g{x_min, x_max, n_cells, boundary};
  g.validate();
  return g;
}

GridSpec1D ProblemSpec1D::grid_for_dx(double dx) const {
  const double cells = (x_max - x_min) / dx;
  const double rounded = std::round(cells);
  if (!(dx > 0.0) || std::abs(cells - rounded) > 1e-9 * rounded ||
      rounded < 1.0) {
    throw std::invalid_argument("cell size does not divide the domain of " +
                                name);
  }
  return grid(static_cast<int>(rounded));
}

GridSpec2D ProblemSpec2D::grid(int nx, int ny) const {
  GridSpec2D g{x_min, x_max, y_min, y_max, nx, ny};
  g.validate();
  return g;
}

ProblemSpec1D gaussian_pulse() {
  ProblemSpec1D p;
  p.name = "gaussian";
  p.x_min = -15.0;
  p.x_max = 15.0;
  p.material = Material{0.5, 4.5};
  p.boundary = Boundary::periodic;
  p.u0 = [](double x) { return std::numbers::pi / 4.0 + std::exp(-x * x); };
  p.u0_x = [](double x) { return -2.0 * x * std::exp(-x * x); };
  const Material m = p.material;
  p.u1 = [m](double x) {
    const double u0 = std::numbers::pi / 4.0 + std::exp(-x * x);
    const double u0x = -2.0 * x * std::exp(-x * x);
    return -wave_speed(m, u0) * u0x;
  };
  return p;
}

double tw_profile(double xi) {
  if (xi <= 0.0) return 0.0;
  if (xi >= 1.0) return std::numbers::pi;
  return std::acos(1.0 - 2.0 * xi);
}

double tw_profile_slope(double xi) {
  if (xi <= 0.0 || xi >= 1.0) return 0.0;
  return 1.0 / std::sqrt(xi - xi * xi);
}

ProblemSpec1D traveling_wave() {
  ProblemSpec1D p;
  p.name = "traveling-wave";
  p.x_min = -3.0;
  p.x_max = 4.0;
  p.material = Material{0.5, 1.5};
  p.boundary = Boundary::fixed_value;
  p.far_field = Ghosts{0.0, std::numbers::pi};
  const double s = std::sqrt(p.material.alpha);
  p.u0 = [](double x) { return tw_profile(x); };
  p.u0_x = [](double x) { return tw_profile_slope(x); };
  // d/dt psi(x - s t) at t = 0
  p.u1 = [s](double x) { return -s * tw_profile_slope(x); };
  p.exact = [s](double t, double x) { return tw_profile(x - s * t); };
  return p;
}

ProblemSpec2D trig_2d() {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  ProblemSpec2D p;
  p.name = "trig-2d";
  p.material = Material{0.5, 1.5};
  p.u0 = [](double x, double y) {
    return 2.0 * std::cos(two_pi * x) * std::sin(two_pi * y);
  };
  p.u1 = [](double x, double y) { return std::sin(two_pi * (x - y)); };
  p.u0_x = [](double x, double y) {
    return -2.0 * two_pi * std::sin(two_pi * x) * std::sin(two_pi * y);
  };
  p.u0_y = [](double x, double y) {
    return 2.0 * two_pi * std::cos(two_pi * x) * std::cos(two_pi * y);
  };
  return p;
}

double tw_ode_residual(double psi_value, double psi_slope, double s,
                       const Material& m, double k) {
  return psi_slope * std::sqrt(std::abs(s * s - wave_speed_sq(m, psi_value))) -
         k;
}

}  // namespace vwave
