#pragma once

#include <cmath>

namespace vwave {

/// Elastic constants of the director energy. Both must be positive, which
/// keeps the wave speed bounded away from zero.
struct Material {
  double alpha = 0.5;
  double beta = 4.5;

  void validate() const;
};

/// c^2(u) = alpha cos^2 u + beta sin^2 u.
[[nodiscard]] inline double wave_speed_sq(const Material& m, double u) {
  return 0.5 * (m.alpha + m.beta) + 0.5 * (m.alpha - m.beta) * std::cos(2.0 * u);
}

/// c(u) = sqrt(alpha cos^2 u + beta sin^2 u).
[[nodiscard]] inline double wave_speed(const Material& m, double u) {
  return std::sqrt(wave_speed_sq(m, u));
}

/// c'(u) = (beta - alpha) sin u cos u / c(u).
[[nodiscard]] inline double wave_speed_deriv(const Material& m, double u) {
  return (m.beta - m.alpha) * std::sin(u) * std::cos(u) / wave_speed(m, u);
}

[[nodiscard]] inline double coeff_phi(double u) { return std::cos(u); }
[[nodiscard]] inline double coeff_psi(double u) { return std::sin(u); }

/// b^2(u) = alpha sin^2 u + beta cos^2 u.
[[nodiscard]] inline double coeff_b2(const Material& m, double u) {
  const double cu = std::cos(u);
  const double su = std::sin(u);
  return m.alpha * su * su + m.beta * cu * cu;
}

/// a(u) = (alpha - beta)/2 sin 2u.
[[nodiscard]] inline double coeff_a(const Material& m, double u) {
  return 0.5 * (m.alpha - m.beta) * std::sin(2.0 * u);
}

[[nodiscard]] inline double min_wave_speed(const Material& m) {
  return std::sqrt(m.alpha < m.beta ? m.alpha : m.beta);
}

[[nodiscard]] inline double max_wave_speed(const Material& m) {
  return std::sqrt(m.alpha > m.beta ? m.alpha : m.beta);
}

}  // namespace vwave
