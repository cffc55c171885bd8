#include "vwave/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace vwave {

void EnergyLog::record(double t, double energy) {
  if (!samples_.empty() && !(t > samples_.back().t)) {
    throw std::invalid_argument("EnergyLog: sample times must increase");
  }
  if (!(energy >= 0.0)) {
    throw std::invalid_argument("EnergyLog: energy must be >= 0");
  }
  samples_.push_back({t, energy});
}

double energy_vw(const StateVW& st, const GridSpec1D& grid) {
  return 0.5 * grid.dx() * (dot(st.v(), st.v()) + dot(st.w(), st.w()));
}

double energy_rs(const StateRS& st, const GridSpec1D& grid) {
  return 0.25 * grid.dx() * (dot(st.r(), st.r()) + dot(st.s(), st.s()));
}

double energy_ham(const StateHam& st, const Setup1D& setup) {
  const GridFn d0u = central_diff_all(st.u(), setup.grid, setup.far_field);
  double total = 0.0;
  for (std::size_t j = 0; j < st.points(); ++j) {
    const double q = st.q()[j];
    total += q * q + wave_speed_sq(setup.material, st.u()[j]) * d0u[j] * d0u[j];
  }
  return 0.5 * setup.grid.dx() * total;
}

double energy_2d(const State2D& st, const Setup2D& setup) {
  const auto& m = setup.material;
  double total = 0.0;
  for (std::size_t k = 0; k < st.points(); ++k) {
    const double p = st.p()[k];
    const double v = st.v()[k];
    const double w = st.w()[k];
    total += p * p + m.alpha * v * v + m.beta * w * w;
  }
  return 0.5 * setup.grid.dx() * setup.grid.dy() * total;
}

double leapfrog_energy(const StateVW& st_n, const StateVW& st_np1,
                       const GridSpec1D& grid) {
  return grid.dx() * (dot(st_n.v(), st_np1.v()) + dot(st_n.w(), st_np1.w()));
}

std::vector<double> dissipation_terms_vw(const StateVW& st,
                                         const Setup1D& setup,
                                         ViscosityParams visc) {
  const auto& grid = setup.grid;
  const std::size_t n = grid.size();
  const bool periodic = grid.boundary == Boundary::periodic;
  const Ghosts zero{0.0, 0.0};
  const auto u = padded(st.u(), grid, 1, setup.far_field);
  const auto v = padded(st.v(), grid, 1, zero);
  const auto w = padded(st.w(), grid, 1, zero);
  // Interface k lies between padded nodes k and k + 1.
  const std::size_t first = periodic ? 1 : 0;
  std::vector<double> m;
  m.reserve(n + 1);
  for (std::size_t k = first; k <= n; ++k) {
    const double s = std::max(wave_speed(setup.material, u[k]),
                              wave_speed(setup.material, u[k + 1]));
    const double jv = v[k + 1] - v[k];
    const double jw = w[k + 1] - w[k];
    m.push_back(0.25 * visc.kappa * s * (jv * jv + jw * jw));
  }
  return m;
}

double dissipation_rate_vw(const StateVW& st, const Setup1D& setup,
                           ViscosityParams visc) {
  return -2.0 * sum(dissipation_terms_vw(st, setup, visc));
}

double dissipation_rate_rs(const StateRS& st, const Setup1D& setup,
                           ViscosityParams visc) {
  const auto& grid = setup.grid;
  const std::size_t n = grid.size();
  const Ghosts zero{0.0, 0.0};
  const auto u = padded(st.u(), grid, 1, setup.far_field);
  const auto r = padded(st.r(), grid, 1, zero);
  const auto s = padded(st.s(), grid, 1, zero);
  const std::size_t first = grid.boundary == Boundary::periodic ? 1 : 0;
  double total = 0.0;
  for (std::size_t k = first; k <= n; ++k) {
    const double speed = std::max(wave_speed(setup.material, u[k]),
                                  wave_speed(setup.material, u[k + 1]));
    const double jr = r[k + 1] - r[k];
    const double js = s[k + 1] - s[k];
    total += speed * (jr * jr + js * js);
  }
  return -0.25 * visc.kappa * total;
}

double energy_ratio(double e_final, double e_initial) {
  if (!(e_initial > 0.0)) {
    throw std::invalid_argument("energy_ratio: initial energy must be > 0");
  }
  return e_final / e_initial;
}

double rel_l2_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("rel_l2_distance: length mismatch");
  }
  double diff = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double d = a[j] - b[j];
    diff += d * d;
    na += a[j] * a[j];
    nb += b[j] * b[j];
  }
  const double denom = std::sqrt(na) + std::sqrt(nb);
  if (denom == 0.0) return 0.0;
  return 200.0 * std::sqrt(diff) / denom;
}

namespace {

int nesting_ratio(const GridSpec1D& fine_grid, const GridSpec1D& coarse_grid,
                  const char* who) {
  const bool same_span = fine_grid.x_min == coarse_grid.x_min &&
                         fine_grid.x_max == coarse_grid.x_max;
  const int nf = fine_grid.n_cells;
  const int nc = coarse_grid.n_cells;
  if (!same_span || nc < 1 || nf % nc != 0) {
    throw std::invalid_argument(std::string(who) + ": grids are not nested");
  }
  const int ratio = nf / nc;
  if ((ratio & (ratio - 1)) != 0) {
    throw std::invalid_argument(std::string(who) +
                                ": refinement ratio must be a power of two");
  }
  return ratio;
}

}  // namespace

double rel_l2_distance_cells(std::span<const double> coarse,
                             const GridSpec1D& coarse_grid,
                             std::span<const double> fine,
                             const GridSpec1D& fine_grid) {
  if (coarse.size() != coarse_grid.size() || fine.size() != fine_grid.size()) {
    throw std::invalid_argument("rel_l2_distance_cells: data/grid size mismatch");
  }
  const int ratio = nesting_ratio(fine_grid, coarse_grid, "rel_l2_distance_cells");
  if (ratio == 1) return rel_l2_distance(coarse, fine);
  const int half = ratio / 2;
  const auto fpad = padded(fine, fine_grid, static_cast<std::size_t>(half),
                           Ghosts{fine.front(), fine.back()});
  double diff = 0.0;
  double nc = 0.0;
  double nf = 0.0;
  for (std::size_t j = 0; j < coarse.size(); ++j) {
    const std::size_t centre = j * static_cast<std::size_t>(ratio) + half;
    for (int m = -half; m <= half; ++m) {
      const double weight = (m == -half || m == half) ? 0.5 : 1.0;
      const double f = fpad[static_cast<std::size_t>(static_cast<int>(centre) + m)];
      const double d = coarse[j] - f;
      diff += weight * d * d;
      nc += weight * coarse[j] * coarse[j];
      nf += weight * f * f;
    }
  }
  const double denom = std::sqrt(nc) + std::sqrt(nf);
  if (denom == 0.0) return 0.0;
  return 200.0 * std::sqrt(diff) / denom;
}

GridFn restrict_to_coarse(std::span<const double> fine,
                          const GridSpec1D& fine_grid,
                          const GridSpec1D& coarse_grid) {
  if (fine.size() != fine_grid.size()) {
    throw std::invalid_argument("restrict_to_coarse: data/grid size mismatch");
  }
  const int ratio = nesting_ratio(fine_grid, coarse_grid, "restrict_to_coarse");
  GridFn out(coarse_grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = fine[i * static_cast<std::size_t>(ratio)];
  }
  return out;
}

}  // namespace vwave
