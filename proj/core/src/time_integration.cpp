#include "vwave/time_integration.hpp"

#include <algorithm>

namespace vwave {

std::string_view to_string(Integrator integrator) {
  switch (integrator) {
    case Integrator::ssprk2: return "ssprk2";
    case Integrator::ssprk3: return "ssprk3";
    case Integrator::rk4: return "rk4";
    case Integrator::leapfrog: return "leapfrog";
  }
  return "unknown";
}

Integrator parse_integrator(std::string_view name) {
  for (auto i : {Integrator::ssprk2, Integrator::ssprk3, Integrator::rk4,
                 Integrator::leapfrog}) {
    if (to_string(i) == name) return i;
  }
  throw std::invalid_argument("unknown integrator '" + std::string(name) +
                              "' (expected ssprk2, ssprk3, rk4, leapfrog)");
}

void StepControl::validate() const {
  if (!(theta > 0.0 && theta <= 0.5)) {
    throw std::invalid_argument("CFL number theta must lie in (0, 0.5]");
  }
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
    throw std::invalid_argument("t_end must be finite and >= 0");
  }
}

namespace {

double max_speed(const Material& m, std::span<const double> u) {
  double cmax = 0.0;
  for (double x : u) cmax = std::max(cmax, wave_speed(m, x));
  return cmax;
}

}  // namespace

double cfl_dt(const GridSpec1D& grid, const Material& m,
              std::span<const double> u, double theta) {
  return theta * grid.dx() / max_speed(m, u);
}

double cfl_dt(const GridSpec2D& grid, const Material& m,
              std::span<const double> u, double theta) {
  return theta * std::min(grid.dx(), grid.dy()) / max_speed(m, u);
}

}  // namespace vwave
