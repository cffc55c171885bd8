#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "support.hpp"
#include "vwave/coefficients.hpp"

using namespace vwave;
using doctest::Approx;

TEST_CASE("wave speed") {
  const Material m{0.5, 4.5};
  CHECK(wave_speed(m, 0.0) == Approx(0.7071068).epsilon(1e-7));
  CHECK(wave_speed(m, std::numbers::pi / 2) == Approx(2.1213203).epsilon(1e-7));
  testing::Rng rng(1);
  for (int k = 0; k < 50; ++k) {
    const double u = rng.uniform(-10, 10);
    CHECK(wave_speed(Material{1, 1}, u) == Approx(1.0));
    const double cu = std::cos(u);
    const double su = std::sin(u);
    CHECK(wave_speed_sq(m, u) == Approx(0.5 * cu * cu + 4.5 * su * su));
    CHECK(wave_speed(m, u) >= min_wave_speed(m) - 1e-14);
    CHECK(wave_speed(m, u) <= max_wave_speed(m) + 1e-14);
  }
}

TEST_CASE("wave speed derivative") {
  const Material m{0.5, 4.5};
  CHECK(wave_speed_deriv(m, 0.0) == 0.0);
  CHECK(wave_speed_deriv(Material{2, 2}, 0.7) == 0.0);
  const double u = std::numbers::pi / 4;
  CHECK(wave_speed_deriv(m, u) == Approx(4.0 * 0.5 / std::sqrt(2.5)));
  CHECK(wave_speed_deriv(m, u) == Approx(1.2649111).epsilon(1e-7));

  testing::Rng rng(2);
  const double h = 1e-6;
  for (double x : {u, 0.3, 1.1, -2.0, 5.0}) {
    const double fd = (wave_speed(m, x + h) - wave_speed(m, x - h)) / (2 * h);
    CHECK(std::abs(wave_speed_deriv(m, x) - fd) <= 1e-8);
  }
  for (int k = 0; k < 20; ++k) {
    const auto mm = rng.material();
    const double x = rng.uniform(-4, 4);
    const double fd = (wave_speed(mm, x + h) - wave_speed(mm, x - h)) / (2 * h);
    CHECK(std::abs(wave_speed_deriv(mm, x) - fd) <= 1e-8);
  }
}

TEST_CASE("director components") {
  CHECK(coeff_phi(0.0) == 1.0);
  CHECK(coeff_psi(0.0) == 0.0);
  CHECK(coeff_phi(std::numbers::pi / 2) == Approx(0.0));
  CHECK(coeff_psi(std::numbers::pi / 2) == 1.0);
  testing::Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const double u = rng.uniform(-10, 10);
    const double s = coeff_phi(u) * coeff_phi(u) + coeff_psi(u) * coeff_psi(u);
    CHECK(std::abs(s - 1.0) <= 1e-15);
  }
}

TEST_CASE("2D coefficients") {
  const Material m{0.5, 4.5};
  CHECK(coeff_b2(m, 0.0) == 4.5);
  CHECK(coeff_a(m, 0.0) == 0.0);
  CHECK(coeff_a(Material{0.5, 1.5}, std::numbers::pi / 4) == Approx(-0.5));
  testing::Rng rng(4);
  for (int k = 0; k < 100; ++k) {
    const auto mm = rng.material();
    const double u = rng.uniform(-6, 6);
    CHECK(coeff_b2(mm, u) + wave_speed_sq(mm, u) == Approx(mm.alpha + mm.beta));
  }
}

TEST_CASE("material validation") {
  CHECK_NOTHROW((Material{0.5, 4.5}.validate()));
  CHECK_THROWS_AS((Material{0.0, 1.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((Material{1.0, -1.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((Material{std::nan(""), 1.0}.validate()), std::invalid_argument);
}
