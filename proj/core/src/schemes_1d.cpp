#include "vwave/schemes_1d.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace vwave {

namespace {

constexpr Ghosts kZeroGhosts{0.0, 0.0};

void check_state(std::size_t points, const Setup1D& setup) {
  if (points != setup.grid.size()) {
    throw std::invalid_argument("state does not match grid size");
  }
}

std::vector<double> wave_speeds(std::span<const double> u,
                                const Material& m) {
  std::vector<double> c(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) c[k] = wave_speed(m, u[k]);
  return c;
}

// Shared body of the (v, w) schemes. Interfaces are visited left to right;
// the padded arrays hold node j at index j + 1, so interface k sits between
// padded nodes k and k + 1 and node j has its minus interface at k = j and
// its plus interface at k = j + 1.
StateVW rhs_vw(const StateVW& st, const Setup1D& setup, double kappa) {
  const auto& grid = setup.grid;
  check_state(st.points(), setup);
  const std::size_t n = grid.size();
  const double dx = grid.dx();
  const double inv_dx = 1.0 / dx;
  const double half_inv_dx = 0.5 / dx;

  const auto u = padded(st.u(), grid, 1, setup.far_field);
  const auto v = padded(st.v(), grid, 1, kZeroGhosts);
  const auto w = padded(st.w(), grid, 1, kZeroGhosts);
  const auto c = wave_speeds(u, setup.material);

  struct Iface {
    double cw;      // cbar * wbar
    double jc_w;    // [[c]] * wbar
    double cv;      // avg of c v
    double visc_v;  // s [[v]]
    double visc_w;  // s [[w]]
  };
  auto iface = [&](std::size_t k) {
    const double cbar = 0.5 * (c[k] + c[k + 1]);
    const double wbar = 0.5 * (w[k] + w[k + 1]);
    const double s = std::max(c[k], c[k + 1]);
    return Iface{cbar * wbar, (c[k + 1] - c[k]) * wbar,
                 0.5 * (c[k] * v[k] + c[k + 1] * v[k + 1]),
                 s * (v[k + 1] - v[k]), s * (w[k + 1] - w[k])};
  };

  StateVW out(n);
  auto dv = out.v();
  auto dw = out.w();
  auto du = out.u();
  Iface minus = iface(0);
  for (std::size_t j = 0; j < n; ++j) {
    const Iface plus = iface(j + 1);
    dv[j] = (plus.cw - minus.cw) * inv_dx -
            (plus.jc_w + minus.jc_w) * half_inv_dx;
    dw[j] = (plus.cv - minus.cv) * inv_dx;
    if (kappa != 0.0) {
      dv[j] += kappa * (plus.visc_v - minus.visc_v) * half_inv_dx;
      dw[j] += kappa * (plus.visc_w - minus.visc_w) * half_inv_dx;
    }
    du[j] = v[j + 1];
    minus = plus;
  }
  return out;
}

StateRS rhs_rs(const StateRS& st, const Setup1D& setup, double kappa) {
  const auto& grid = setup.grid;
  check_state(st.points(), setup);
  const std::size_t n = grid.size();
  const double dx = grid.dx();
  const double inv_dx = 1.0 / dx;
  const double half_inv_dx = 0.5 / dx;
  const double quarter_inv_dx = 0.25 / dx;

  const auto u = padded(st.u(), grid, 1, setup.far_field);
  const auto r = padded(st.r(), grid, 1, kZeroGhosts);
  const auto s = padded(st.s(), grid, 1, kZeroGhosts);
  const auto c = wave_speeds(u, setup.material);

  struct Iface {
    double cr;  // cbar * Rbar
    double cs;  // cbar * Sbar
    double jc;  // [[c]]
    double visc_r;
    double visc_s;
  };
  auto iface = [&](std::size_t k) {
    const double cbar = 0.5 * (c[k] + c[k + 1]);
    const double speed = std::max(c[k], c[k + 1]);
    return Iface{cbar * 0.5 * (r[k] + r[k + 1]),
                 cbar * 0.5 * (s[k] + s[k + 1]), c[k + 1] - c[k],
                 speed * (r[k + 1] - r[k]), speed * (s[k + 1] - s[k])};
  };

  StateRS out(n);
  auto dr = out.r();
  auto ds = out.s();
  auto du = out.u();
  Iface minus = iface(0);
  for (std::size_t j = 0; j < n; ++j) {
    const Iface plus = iface(j + 1);
    const double rj = r[j + 1];
    const double sj = s[j + 1];
    const double source = -(rj - sj) * (plus.jc + minus.jc) * quarter_inv_dx;
    dr[j] = (plus.cr - minus.cr) * inv_dx + source;
    ds[j] = -(plus.cs - minus.cs) * inv_dx + source;
    if (kappa != 0.0) {
      dr[j] += kappa * (plus.visc_r - minus.visc_r) * half_inv_dx;
      ds[j] += kappa * (plus.visc_s - minus.visc_s) * half_inv_dx;
    }
    du[j] = 0.5 * (rj + sj);
    minus = plus;
  }
  return out;
}

void check_kappa(double kappa) {
  if (!(kappa >= 0.0)) {
    throw std::invalid_argument("viscosity scale kappa must be >= 0");
  }
}

}  // namespace

StateVW rhs_vw_conservative(const StateVW& st, const Setup1D& setup) {
  return rhs_vw(st, setup, 0.0);
}

StateVW rhs_vw_dissipative(const StateVW& st, const Setup1D& setup,
                           ViscosityParams visc) {
  check_kappa(visc.kappa);
  return rhs_vw(st, setup, visc.kappa);
}

StateRS rhs_rs_conservative(const StateRS& st, const Setup1D& setup) {
  return rhs_rs(st, setup, 0.0);
}

StateRS rhs_rs_dissipative(const StateRS& st, const Setup1D& setup,
                           ViscosityParams visc) {
  check_kappa(visc.kappa);
  return rhs_rs(st, setup, visc.kappa);
}

StateHam rhs_hamiltonian(const StateHam& st, const Setup1D& setup) {
  const auto& grid = setup.grid;
  check_state(st.points(), setup);
  const auto& m = setup.material;
  const std::size_t n = grid.size();
  const double half_inv_dx = 0.5 / grid.dx();

  // Node j lives at padded index j + 2; D0 u is needed on nodes -1..n.
  const auto u = padded(st.u(), grid, 2, setup.far_field);
  std::vector<double> d0u(n + 4, 0.0);
  std::vector<double> flux(n + 4, 0.0);
  for (std::size_t k = 1; k <= n + 2; ++k) {
    d0u[k] = (u[k + 1] - u[k - 1]) * half_inv_dx;
    flux[k] = wave_speed_sq(m, u[k]) * d0u[k];
  }

  StateHam out(n);
  auto du = out.u();
  auto dq = out.q();
  const auto q = st.q();
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t k = j + 2;
    const double uj = u[k];
    // c c' = (beta - alpha) sin u cos u
    const double cc_prime = (m.beta - m.alpha) * std::sin(uj) * std::cos(uj);
    dq[j] = -cc_prime * d0u[k] * d0u[k] + (flux[k + 1] - flux[k - 1]) * half_inv_dx;
    du[j] = q[j];
  }
  return out;
}

namespace {

GridFn slope_of(std::span<const double> u0,
                std::optional<std::span<const double>> u0x,
                const Setup1D& setup) {
  if (u0x) {
    if (u0x->size() != u0.size()) {
      throw std::invalid_argument("u0x length does not match u0");
    }
    return GridFn(u0x->begin(), u0x->end());
  }
  return central_diff_all(u0, setup.grid, setup.far_field);
}

void check_init(std::span<const double> u0, std::span<const double> u1,
                const Setup1D& setup) {
  if (u0.size() != setup.grid.size() || u1.size() != setup.grid.size()) {
    throw std::invalid_argument("initial data does not match grid size");
  }
}

}  // namespace

StateVW init_vw(std::span<const double> u0, std::span<const double> u1,
                std::optional<std::span<const double>> u0x,
                const Setup1D& setup) {
  check_init(u0, u1, setup);
  const GridFn slope = slope_of(u0, u0x, setup);
  StateVW st(u0.size());
  for (std::size_t j = 0; j < u0.size(); ++j) {
    st.v()[j] = u1[j];
    st.w()[j] = wave_speed(setup.material, u0[j]) * slope[j];
    st.u()[j] = u0[j];
  }
  return st;
}

StateRS init_rs(std::span<const double> u0, std::span<const double> u1,
                std::optional<std::span<const double>> u0x,
                const Setup1D& setup) {
  check_init(u0, u1, setup);
  const GridFn slope = slope_of(u0, u0x, setup);
  StateRS st(u0.size());
  for (std::size_t j = 0; j < u0.size(); ++j) {
    const double cw = wave_speed(setup.material, u0[j]) * slope[j];
    st.r()[j] = u1[j] + cw;
    st.s()[j] = u1[j] - cw;
    st.u()[j] = u0[j];
  }
  return st;
}

StateHam init_ham(std::span<const double> u0, std::span<const double> u1,
                  const Setup1D& setup) {
  check_init(u0, u1, setup);
  StateHam st(u0.size());
  std::copy(u0.begin(), u0.end(), st.u().begin());
  std::copy(u1.begin(), u1.end(), st.q().begin());
  return st;
}

StateVW to_vw(const StateRS& st) {
  StateVW out(st.points());
  for (std::size_t j = 0; j < st.points(); ++j) {
    out.v()[j] = 0.5 * (st.r()[j] + st.s()[j]);
    out.w()[j] = 0.5 * (st.r()[j] - st.s()[j]);
    out.u()[j] = st.u()[j];
  }
  return out;
}

StateVW to_vw(const StateHam& st, const Setup1D& setup) {
  const GridFn d0u = central_diff_all(st.u(), setup.grid, setup.far_field);
  StateVW out(st.points());
  for (std::size_t j = 0; j < st.points(); ++j) {
    out.v()[j] = st.q()[j];
    out.w()[j] = wave_speed(setup.material, st.u()[j]) * d0u[j];
    out.u()[j] = st.u()[j];
  }
  return out;
}

}  // namespace vwave
