#include "vwave/schemes_2d.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace vwave {

namespace {

// Every interface quantity the scheme touches, for the interface between
// nodes a and b (b is the +1 neighbour along the axis).
struct Iface {
  double phi_v;        // avg of phi v
  double psi_v;        // avg of psi v
  double phi_w;        // avg of phi w
  double psi_w;        // avg of psi w
  double phibar_pbar;
  double psibar_pbar;
  double pbar_jphi;    // pbar [[phi]]
  double pbar_jpsi;    // pbar [[psi]]
  double s_jp;         // s [[p]]
  double jv;
  double jw;
};

struct Fields {
  std::span<const double> p, v, w;
  const std::vector<double>& phi;
  const std::vector<double>& psi;
  const std::vector<double>& c;
};

Iface iface(const Fields& f, std::size_t a, std::size_t b) {
  const double pbar = 0.5 * (f.p[a] + f.p[b]);
  return Iface{
      0.5 * (f.phi[a] * f.v[a] + f.phi[b] * f.v[b]),
      0.5 * (f.psi[a] * f.v[a] + f.psi[b] * f.v[b]),
      0.5 * (f.phi[a] * f.w[a] + f.phi[b] * f.w[b]),
      0.5 * (f.psi[a] * f.w[a] + f.psi[b] * f.w[b]),
      0.5 * (f.phi[a] + f.phi[b]) * pbar,
      0.5 * (f.psi[a] + f.psi[b]) * pbar,
      pbar * (f.phi[b] - f.phi[a]),
      pbar * (f.psi[b] - f.psi[a]),
      std::max(f.c[a], f.c[b]) * (f.p[b] - f.p[a]),
      f.v[b] - f.v[a],
      f.w[b] - f.w[a],
  };
}

State2D rhs_2d(const State2D& st, const Setup2D& setup, const Viscosity2D& k) {
  const auto& grid = setup.grid;
  const auto& m = setup.material;
  if (st.points() != grid.size()) {
    throw std::invalid_argument("2D state does not match grid size");
  }
  const std::size_t n = grid.size();
  const double idx = 1.0 / grid.dx();
  const double idy = 1.0 / grid.dy();
  const double hidx = 0.5 * idx;
  const double hidy = 0.5 * idy;

  std::vector<double> phi(n), psi(n), c(n);
  const auto u = st.u();
  for (std::size_t k2 = 0; k2 < n; ++k2) {
    phi[k2] = coeff_phi(u[k2]);
    psi[k2] = coeff_psi(u[k2]);
    c[k2] = std::sqrt(m.alpha * phi[k2] * phi[k2] + m.beta * psi[k2] * psi[k2]);
  }
  const Fields f{st.p(), st.v(), st.w(), phi, psi, c};

  State2D out(n);
  auto dp = out.p();
  auto dv = out.v();
  auto dw = out.w();
  auto du = out.u();
  const auto p = st.p();
  const auto v = st.v();
  const auto w = st.w();

  const auto nx = static_cast<std::ptrdiff_t>(grid.nx);
  const auto ny = static_cast<std::ptrdiff_t>(grid.ny);
  for (std::ptrdiff_t i = 0; i < nx; ++i) {
    for (std::ptrdiff_t j = 0; j < ny; ++j) {
      const std::size_t o = grid.index(i, j);
      const Iface xp = iface(f, o, grid.index(i + 1, j));
      const Iface xm = iface(f, grid.index(i - 1, j), o);
      const Iface yp = iface(f, o, grid.index(i, j + 1));
      const Iface ym = iface(f, grid.index(i, j - 1), o);

      dp[o] = m.alpha * idx * (xp.phi_v - xm.phi_v) +
              m.alpha * idy * (yp.psi_v - ym.psi_v) +
              m.beta * idx * (xp.psi_w - xm.psi_w) -
              m.beta * idy * (yp.phi_w - ym.phi_w) +
              (m.alpha - m.beta) * v[o] * w[o];
      dv[o] = idx * (xp.phibar_pbar - xm.phibar_pbar) -
              hidx * (xp.pbar_jphi + xm.pbar_jphi) +
              idy * (yp.psibar_pbar - ym.psibar_pbar) -
              hidy * (yp.pbar_jpsi + ym.pbar_jpsi) - p[o] * w[o];
      dw[o] = idx * (xp.psibar_pbar - xm.psibar_pbar) -
              hidx * (xp.pbar_jpsi + xm.pbar_jpsi) -
              idy * (yp.phibar_pbar - ym.phibar_pbar) +
              hidy * (yp.pbar_jphi + ym.pbar_jphi) + p[o] * v[o];

      if (k.kappa_p != 0.0) {
        dp[o] += k.kappa_p * (hidx * (xp.s_jp - xm.s_jp) +
                              hidy * (yp.s_jp - ym.s_jp));
      }
      if (k.kappa_v != 0.0) {
        dv[o] += k.kappa_v * (hidx * (xp.jv - xm.jv) + hidy * (yp.jv - ym.jv));
      }
      if (k.kappa_w != 0.0) {
        dw[o] += k.kappa_w * (hidx * (xp.jw - xm.jw) + hidy * (yp.jw - ym.jw));
      }
      du[o] = setup.angle == AngleEvolution::by_p ? p[o] : v[o];
    }
  }
  return out;
}

}  // namespace

State2D rhs_2d_conservative(const State2D& st, const Setup2D& setup) {
  return rhs_2d(st, setup, Viscosity2D{0.0, 0.0, 0.0});
}

State2D rhs_2d_dissipative(const State2D& st, const Setup2D& setup,
                           Viscosity2D visc) {
  if (!(visc.kappa_p >= 0.0 && visc.kappa_v >= 0.0 && visc.kappa_w >= 0.0)) {
    throw std::invalid_argument("2D viscosity weights must be >= 0");
  }
  return rhs_2d(st, setup, visc);
}

State2D init_2d(std::span<const double> u0, std::span<const double> u1,
                std::optional<std::span<const double>> u0x,
                std::optional<std::span<const double>> u0y,
                const Setup2D& setup) {
  const auto& grid = setup.grid;
  const std::size_t n = grid.size();
  if (u0.size() != n || u1.size() != n || (u0x && u0x->size() != n) ||
      (u0y && u0y->size() != n)) {
    throw std::invalid_argument("2D initial data does not match grid size");
  }
  State2D st(n);
  for (std::ptrdiff_t i = 0; i < grid.nx; ++i) {
    for (std::ptrdiff_t j = 0; j < grid.ny; ++j) {
      const std::size_t o = grid.index(i, j);
      const double gx = u0x ? (*u0x)[o] : central_diff_2d(u0, grid, Axis::x, i, j);
      const double gy = u0y ? (*u0y)[o] : central_diff_2d(u0, grid, Axis::y, i, j);
      const double ph = coeff_phi(u0[o]);
      const double ps = coeff_psi(u0[o]);
      st.p()[o] = u1[o];
      st.v()[o] = ph * gx + ps * gy;
      st.w()[o] = ps * gx - ph * gy;
      st.u()[o] = u0[o];
    }
  }
  return st;
}

}  // namespace vwave
