#pragma once

#include <optional>
#include <span>

#include "vwave/coefficients.hpp"
#include "vwave/grid.hpp"
#include "vwave/state.hpp"

namespace vwave {

/// (v, w, u) with v = u_t and w = c(u) u_x.
struct StateVW : FieldStack<3> {
  using FieldStack::FieldStack;
  std::span<double> v() { return field(0); }
  std::span<double> w() { return field(1); }
  std::span<double> u() { return field(2); }
  std::span<const double> v() const { return field(0); }
  std::span<const double> w() const { return field(1); }
  std::span<const double> u() const { return field(2); }
};

/// Riemann invariants R = u_t + c(u) u_x, S = u_t - c(u) u_x, plus u.
struct StateRS : FieldStack<3> {
  using FieldStack::FieldStack;
  std::span<double> r() { return field(0); }
  std::span<double> s() { return field(1); }
  std::span<double> u() { return field(2); }
  std::span<const double> r() const { return field(0); }
  std::span<const double> s() const { return field(1); }
  std::span<const double> u() const { return field(2); }
};

/// Second-order form reduced to first order in time: (u, q = u_t).
struct StateHam : FieldStack<2> {
  using FieldStack::FieldStack;
  std::span<double> u() { return field(0); }
  std::span<double> q() { return field(1); }
  std::span<const double> u() const { return field(0); }
  std::span<const double> q() const { return field(1); }
};

/// Scale of the numerical viscosity. kappa = 1 is the plain dissipative
/// scheme; kappa = 0 switches the viscosity off.
struct ViscosityParams {
  double kappa = 1.0;
};

/// Grid, material and far-field angle shared by the 1D operators.
///
/// On fixed_value grids the ghost nodes carry u = far_field and zero for
/// every derivative-like unknown (v, w, R, S, q).
struct Setup1D {
  GridSpec1D grid;
  Material material;
  Ghosts far_field{};
};

// Semi-discrete right-hand sides. Each returns the time derivative of every
// unknown, packed in the same state type.

[[nodiscard]] StateVW rhs_vw_conservative(const StateVW& st,
                                          const Setup1D& setup);
[[nodiscard]] StateVW rhs_vw_dissipative(const StateVW& st,
                                         const Setup1D& setup,
                                         ViscosityParams visc = {});

[[nodiscard]] StateRS rhs_rs_conservative(const StateRS& st,
                                          const Setup1D& setup);
[[nodiscard]] StateRS rhs_rs_dissipative(const StateRS& st,
                                         const Setup1D& setup,
                                         ViscosityParams visc = {});

/// u_tt = -c(u) c'(u) (D0 u)^2 + D0(c^2(u) D0 u).
[[nodiscard]] StateHam rhs_hamiltonian(const StateHam& st,
                                       const Setup1D& setup);

// Conversions from physical data (u0 = u(0), u1 = u_t(0)). When the
// analytic derivative u0x is absent, D0 u0 is used instead.

[[nodiscard]] StateVW init_vw(std::span<const double> u0,
                              std::span<const double> u1,
                              std::optional<std::span<const double>> u0x,
                              const Setup1D& setup);
[[nodiscard]] StateRS init_rs(std::span<const double> u0,
                              std::span<const double> u1,
                              std::optional<std::span<const double>> u0x,
                              const Setup1D& setup);
[[nodiscard]] StateHam init_ham(std::span<const double> u0,
                                std::span<const double> u1,
                                const Setup1D& setup);

/// v = (R + S)/2, w = (R - S)/2.
[[nodiscard]] StateVW to_vw(const StateRS& st);
/// v = q, w = c(u) D0 u.
[[nodiscard]] StateVW to_vw(const StateHam& st, const Setup1D& setup);

}  // namespace vwave
