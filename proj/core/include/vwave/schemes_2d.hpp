#pragma once

#include <optional>
#include <span>

#include "vwave/coefficients.hpp"
#include "vwave/grid.hpp"
#include "vwave/state.hpp"

namespace vwave {

/// p = u_t, v = cos u u_x + sin u u_y, w = sin u u_x - cos u u_y, and u.
struct State2D : FieldStack<4> {
  using FieldStack::FieldStack;
  std::span<double> p() { return field(0); }
  std::span<double> v() { return field(1); }
  std::span<double> w() { return field(2); }
  std::span<double> u() { return field(3); }
  std::span<const double> p() const { return field(0); }
  std::span<const double> v() const { return field(1); }
  std::span<const double> w() const { return field(2); }
  std::span<const double> u() const { return field(3); }
};

/// Viscosity weights of the dissipative 2D scheme. kappa_p multiplies the
/// wave-speed scaled term on p; kappa_v and kappa_w multiply the unit-speed
/// terms on v and w (kappa_w plays the role of nu).
struct Viscosity2D {
  double kappa_p = 1.0;
  double kappa_v = 1.0;
  double kappa_w = 1.0;
};

/// Which unknown drives the angle. by_p evolves u_t = p; by_v reproduces the
/// literal u_t = v variant for comparison runs.
enum class AngleEvolution { by_p, by_v };

struct Setup2D {
  GridSpec2D grid;
  Material material;
  AngleEvolution angle = AngleEvolution::by_p;
};

[[nodiscard]] State2D rhs_2d_conservative(const State2D& st,
                                          const Setup2D& setup);
[[nodiscard]] State2D rhs_2d_dissipative(const State2D& st,
                                         const Setup2D& setup,
                                         Viscosity2D visc = {});

/// p = u1, v = cos(u0) u0_x + sin(u0) u0_y, w = sin(u0) u0_x - cos(u0) u0_y.
/// Missing gradients are replaced by D0 along the respective axis.
[[nodiscard]] State2D init_2d(std::span<const double> u0,
                              std::span<const double> u1,
                              std::optional<std::span<const double>> u0x,
                              std::optional<std::span<const double>> u0y,
                              const Setup2D& setup);

}  // namespace vwave
