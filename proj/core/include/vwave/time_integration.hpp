#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vwave/coefficients.hpp"
#include "vwave/grid.hpp"
#include "vwave/state.hpp"

namespace vwave {

enum class Integrator { ssprk2, ssprk3, rk4, leapfrog };

[[nodiscard]] std::string_view to_string(Integrator integrator);
/// Throws std::invalid_argument for unknown names.
[[nodiscard]] Integrator parse_integrator(std::string_view name);

struct StepControl {
  double theta = 0.05;  // CFL number, 0 < theta <= 0.5
  double t_end = 1.0;
  // Runge-Kutta steps recompute dt from the current state when set,
  // otherwise dt is frozen at its initial value. Leap-frog always uses a
  // uniform step (see integrate()).
  bool recompute_each_step = true;

  void validate() const;
};

/// dt = theta dx / max_j c(u_j).
[[nodiscard]] double cfl_dt(const GridSpec1D& grid, const Material& m,
                            std::span<const double> u, double theta);
/// dt = theta min(dx, dy) / max_ij c(u_ij).
[[nodiscard]] double cfl_dt(const GridSpec2D& grid, const Material& m,
                            std::span<const double> u, double theta);

/// Raised by integrate() when a step produces NaN or Inf.
class NonFiniteState : public std::runtime_error {
 public:
  NonFiniteState(std::size_t step, double t)
      : std::runtime_error("non-finite state at step " + std::to_string(step) +
                           " (t = " + std::to_string(t) + ")"),
        step_(step),
        t_(t) {}
  [[nodiscard]] std::size_t step() const { return step_; }
  [[nodiscard]] double time() const { return t_; }

 private:
  std::size_t step_;
  double t_;
};

namespace detail {

// out = a * x + b * (y + dt * f)
template <FlatState S>
void combine(S& out, double a, const S& x, double b, const S& y, double dt,
             const S& f) {
  auto o = out.flat();
  const auto xs = x.flat();
  const auto ys = y.flat();
  const auto fs = f.flat();
  for (std::size_t k = 0; k < o.size(); ++k) {
    o[k] = a * xs[k] + b * (ys[k] + dt * fs[k]);
  }
}

}  // namespace detail

/// Two-stage SSP Runge-Kutta (Heun form).
template <FlatState S, class Rhs>
[[nodiscard]] S ssprk2_step(const S& y, Rhs&& rhs, double dt) {
  S y1 = y;
  detail::combine(y1, 0.0, y, 1.0, y, dt, rhs(y));
  S out = y;
  detail::combine(out, 0.5, y, 0.5, y1, dt, rhs(y1));
  return out;
}

/// Three-stage SSP Runge-Kutta in Shu-Osher convex form.
template <FlatState S, class Rhs>
[[nodiscard]] S ssprk3_step(const S& y, Rhs&& rhs, double dt) {
  S y1 = y;
  detail::combine(y1, 0.0, y, 1.0, y, dt, rhs(y));
  S y2 = y;
  detail::combine(y2, 0.75, y, 0.25, y1, dt, rhs(y1));
  S out = y;
  detail::combine(out, 1.0 / 3.0, y, 2.0 / 3.0, y2, dt, rhs(y2));
  return out;
}

/// Classical four-stage Runge-Kutta.
template <FlatState S, class Rhs>
[[nodiscard]] S rk4_step(const S& y, Rhs&& rhs, double dt) {
  const S k1 = rhs(y);
  S tmp = y;
  detail::combine(tmp, 0.0, y, 1.0, y, 0.5 * dt, k1);
  const S k2 = rhs(tmp);
  detail::combine(tmp, 0.0, y, 1.0, y, 0.5 * dt, k2);
  const S k3 = rhs(tmp);
  detail::combine(tmp, 0.0, y, 1.0, y, dt, k3);
  const S k4 = rhs(tmp);
  S out = y;
  auto o = out.flat();
  const auto a = k1.flat();
  const auto b = k2.flat();
  const auto c = k3.flat();
  const auto d = k4.flat();
  for (std::size_t k = 0; k < o.size(); ++k) {
    o[k] += dt / 6.0 * (a[k] + 2.0 * b[k] + 2.0 * c[k] + d[k]);
  }
  return out;
}

/// y^{n+1} = y^{n-1} + 2 dt f(y^n).
template <FlatState S, class Rhs>
[[nodiscard]] S leapfrog_step(const S& prev, const S& curr, Rhs&& rhs,
                              double dt) {
  S out = prev;
  detail::combine(out, 0.0, prev, 1.0, prev, 2.0 * dt, rhs(curr));
  return out;
}

struct StepInfo {
  std::size_t step = 0;
  double t = 0.0;
  double dt = 0.0;
};

template <FlatState S>
struct IntegrationResult {
  S state;
  std::size_t steps = 0;
  double t = 0.0;
};

/// Advances `initial` to control.t_end.
///
/// `unit_dt(state)` returns the theta = 1 step (dx / max c); the step used is
/// theta times that. Runge-Kutta runs shorten the last step so that t_end is
/// hit exactly. For leap-frog theta unit_dt bounds the increment 2 dt that
/// multiplies f, so the level spacing is half of it. Its two-level invariant
/// needs equal steps, hence dt = t_end / ceil(t_end / (theta unit_dt / 2))
/// with unit_dt taken from the initial state, started by one SSPRK3 step.
///
/// `observer(info, state)` sees the initial state (step 0) and every step
/// boundary after it. Throws NonFiniteState on NaN/Inf.
template <FlatState S, class Rhs, class UnitDt, class Observer>
IntegrationResult<S> integrate(S initial, Rhs&& rhs, UnitDt&& unit_dt,
                               const StepControl& control,
                               Integrator integrator, Observer&& observer) {
  control.validate();
  IntegrationResult<S> result{std::move(initial), 0, 0.0};
  observer(StepInfo{0, 0.0, 0.0}, static_cast<const S&>(result.state));
  if (control.t_end <= 0.0) return result;

  auto check = [&](const S& s, std::size_t step, double t) {
    if (!all_finite(s.flat())) throw NonFiniteState(step, t);
  };

  if (integrator == Integrator::leapfrog) {
    const double dt_cfl = 0.5 * control.theta * unit_dt(result.state);
    const auto n_steps =
        static_cast<std::size_t>(std::ceil(control.t_end / dt_cfl - 1e-12));
    const double dt = control.t_end / static_cast<double>(n_steps);
    S prev = result.state;
    S curr = ssprk3_step(prev, rhs, dt);
    check(curr, 1, dt);
    observer(StepInfo{1, n_steps == 1 ? control.t_end : dt, dt},
             static_cast<const S&>(curr));
    for (std::size_t n = 2; n <= n_steps; ++n) {
      S next = leapfrog_step(prev, curr, rhs, dt);
      const double t =
          n == n_steps ? control.t_end : static_cast<double>(n) * dt;
      check(next, n, t);
      prev = std::move(curr);
      curr = std::move(next);
      observer(StepInfo{n, t, dt}, static_cast<const S&>(curr));
    }
    result.state = std::move(curr);
    result.steps = n_steps;
    result.t = control.t_end;
    return result;
  }

  double t = 0.0;
  std::size_t step = 0;
  double dt_frozen = 0.0;
  while (t < control.t_end) {
    double dt;
    if (control.recompute_each_step || step == 0) {
      dt = control.theta * unit_dt(result.state);
      dt_frozen = dt;
    } else {
      dt = dt_frozen;
    }
    bool last = false;
    // Avoid a sliver step caused by roundoff in the accumulated time.
    if (t + dt >= control.t_end * (1.0 - 1e-13)) {
      dt = control.t_end - t;
      last = true;
    }
    switch (integrator) {
      case Integrator::ssprk2:
        result.state = ssprk2_step(result.state, rhs, dt);
        break;
      case Integrator::ssprk3:
        result.state = ssprk3_step(result.state, rhs, dt);
        break;
      case Integrator::rk4:
        result.state = rk4_step(result.state, rhs, dt);
        break;
      case Integrator::leapfrog:
        break;
    }
    ++step;
    t = last ? control.t_end : t + dt;
    check(result.state, step, t);
    observer(StepInfo{step, t, dt}, static_cast<const S&>(result.state));
  }
  result.steps = step;
  result.t = t;
  return result;
}

template <FlatState S, class Rhs, class UnitDt>
IntegrationResult<S> integrate(S initial, Rhs&& rhs, UnitDt&& unit_dt,
                               const StepControl& control,
                               Integrator integrator) {
  return integrate(std::move(initial), std::forward<Rhs>(rhs),
                   std::forward<UnitDt>(unit_dt), control, integrator,
                   [](const StepInfo&, const S&) {});
}

}  // namespace vwave
