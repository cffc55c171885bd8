#pragma once

#include <span>
#include <vector>

#include "vwave/grid.hpp"
#include "vwave/schemes_1d.hpp"
#include "vwave/schemes_2d.hpp"

namespace vwave {

struct EnergySample {
  double t;
  double energy;
};

/// Time series of a discrete energy; times strictly increase.
class EnergyLog {
 public:
  /// Throws std::invalid_argument if t does not exceed the last sample time
  /// or the energy is negative.
  void record(double t, double energy);
  [[nodiscard]] const std::vector<EnergySample>& samples() const {
    return samples_;
  }
  [[nodiscard]] bool empty() const { return samples_.empty(); }

 private:
  std::vector<EnergySample> samples_;
};

/// (dx/2) sum (v^2 + w^2).
[[nodiscard]] double energy_vw(const StateVW& st, const GridSpec1D& grid);
/// (dx/4) sum (R^2 + S^2), which equals energy_vw of the same data.
[[nodiscard]] double energy_rs(const StateRS& st, const GridSpec1D& grid);
/// (dx/2) sum (q^2 + c^2(u) (D0 u)^2).
[[nodiscard]] double energy_ham(const StateHam& st, const Setup1D& setup);
/// (dx dy/2) sum (p^2 + alpha v^2 + beta w^2).
[[nodiscard]] double energy_2d(const State2D& st, const Setup2D& setup);

/// dx sum (v^n v^{n+1} + w^n w^{n+1}); invariant of leap-frog stepping of
/// the conservative (v, w) scheme.
[[nodiscard]] double leapfrog_energy(const StateVW& st_n,
                                     const StateVW& st_np1,
                                     const GridSpec1D& grid);

/// Per-interface dissipation M_{j+1/2} = (kappa/4) s_{j+1/2} ([[v]]^2 +
/// [[w]]^2) of the dissipative (v, w) scheme, one entry per interface j+1/2
/// for j = 0..n-1 (periodic) or j = -1..n-1 (fixed_value).
[[nodiscard]] std::vector<double> dissipation_terms_vw(const StateVW& st,
                                                       const Setup1D& setup,
                                                       ViscosityParams visc);

/// d/dt energy_vw along the dissipative (v, w) scheme on a periodic grid:
/// -2 sum_j M_{j+1/2}.
[[nodiscard]] double dissipation_rate_vw(const StateVW& st,
                                         const Setup1D& setup,
                                         ViscosityParams visc);

/// d/dt energy_rs along the dissipative (R, S) scheme on a periodic grid:
/// -(kappa/4) sum_j s_{j+1/2} ([[R]]^2 + [[S]]^2).
[[nodiscard]] double dissipation_rate_rs(const StateRS& st,
                                         const Setup1D& setup,
                                         ViscosityParams visc);

/// E_final / E_initial. Throws std::invalid_argument unless E_initial > 0.
[[nodiscard]] double energy_ratio(double e_final, double e_initial);

/// 200 ||a - b|| / (||a|| + ||b||); 0 when both vectors vanish. Throws
/// std::invalid_argument on length mismatch.
[[nodiscard]] double rel_l2_distance(std::span<const double> a,
                                     std::span<const double> b);

/// d^2 measured on the fine grid, with the coarse solution held constant
/// over the cell [x_j - dx/2, x_j + dx/2] around each coarse node. Fine
/// nodes on a cell boundary count half towards each neighbouring cell. The
/// grids must be nested as for restrict_to_coarse.
[[nodiscard]] double rel_l2_distance_cells(std::span<const double> coarse,
                                           const GridSpec1D& coarse_grid,
                                           std::span<const double> fine,
                                           const GridSpec1D& fine_grid);

/// Samples a fine-grid function at the nodes it shares with a coarse grid.
/// Both grids must cover the same interval, with a power-of-two cell ratio.
[[nodiscard]] GridFn restrict_to_coarse(std::span<const double> fine,
                                        const GridSpec1D& fine_grid,
                                        const GridSpec1D& coarse_grid);

}  // namespace vwave
