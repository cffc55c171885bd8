#pragma once

#include <functional>
#include <optional>
#include <string>

#include "vwave/coefficients.hpp"
#include "vwave/grid.hpp"

namespace vwave {

using Profile1D = std::function<double(double)>;
using Profile2D = std::function<double(double, double)>;

/// A 1D benchmark: domain, material, boundary treatment, the initial angle
/// u0 and rate u1, and optionally the analytic u0' and an exact solution.
struct ProblemSpec1D {
  std::string name;
  double x_min = 0.0;
  double x_max = 1.0;
  Material material;
  Boundary boundary = Boundary::periodic;
  Ghosts far_field{};  // angle outside a fixed_value domain
  Profile1D u0;
  Profile1D u1;
  std::optional<Profile1D> u0_x;
  std::optional<std::function<double(double, double)>> exact;  // (t, x)

  /// Grid with the given number of cells over this problem's domain.
  [[nodiscard]] GridSpec1D grid(int n_cells) const;
  /// Grid with cell size dx; throws unless dx divides the domain length.
  [[nodiscard]] GridSpec1D grid_for_dx(double dx) const;
};

struct ProblemSpec2D {
  std::string name;
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;
  Material material;
  Profile2D u0;
  Profile2D u1;
  std::optional<Profile2D> u0_x;
  std::optional<Profile2D> u0_y;

  [[nodiscard]] GridSpec2D grid(int nx, int ny) const;
};

/// u0 = pi/4 + exp(-x^2), u1 = -c(u0) u0', periodic on [-15, 15],
/// alpha = 0.5, beta = 4.5.
[[nodiscard]] ProblemSpec1D gaussian_pulse();

/// Explicit traveling wave of speed sqrt(alpha) for alpha = 0.5,
/// beta = 1.5, on [-3, 4] with the far field held at 0 (left) and pi (right).
[[nodiscard]] ProblemSpec1D traveling_wave();

/// u0 = 2 cos(2 pi x) sin(2 pi y), u1 = sin(2 pi (x - y)), periodic on
/// [0, 1]^2, alpha = 0.5, beta = 1.5.
[[nodiscard]] ProblemSpec2D trig_2d();

/// Traveling-wave profile: 0 for xi <= 0, acos(1 - 2 xi) on (0, 1), pi for
/// xi >= 1.
[[nodiscard]] double tw_profile(double xi);
/// Its derivative, 1/sqrt(xi - xi^2) on (0, 1) and 0 elsewhere (including
/// the endpoints).
[[nodiscard]] double tw_profile_slope(double xi);

/// Integration constant of the explicit traveling wave in
/// psi' sqrt|s^2 - c^2(psi)| = k.
inline constexpr double kTravelingWaveConstant = 2.0;

/// psi' sqrt|s^2 - c^2(psi)| - k.
[[nodiscard]] double tw_ode_residual(double psi_value, double psi_slope,
                                     double s, const Material& m,
                                     double k = kTravelingWaveConstant);

}  // namespace vwave
