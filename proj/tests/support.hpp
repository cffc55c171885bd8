#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vwave/coefficients.hpp"
#include "vwave/grid.hpp"

namespace vwave::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  std::vector<double> vector(std::size_t n, double lo, double hi) {
    std::vector<double> out(n);
    for (auto& x : out) x = uniform(lo, hi);
    return out;
  }

  Material material() {
    // (0, 5], away from zero so that c stays well conditioned
    return Material{uniform(1e-3, 5.0), uniform(1e-3, 5.0)};
  }

 private:
  std::mt19937_64 engine_;
};

inline GridSpec1D periodic_grid(int n, double length = 1.0) {
  return GridSpec1D{0.0, length, n, Boundary::periodic};
}

inline double rel_err(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace vwave::testing
