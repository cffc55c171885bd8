#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "vwave/problems.hpp"
#include "vwave/schemes_2d.hpp"

using namespace vwave;
using doctest::Approx;

namespace {

State2D random_state(testing::Rng& rng, std::size_t n) {
  State2D s(n);
  for (auto& x : s.flat()) x = rng.uniform(-2, 2);
  for (auto& x : s.u()) x = rng.uniform(-4, 4);
  return s;
}

}  // namespace

TEST_CASE("single periodic cell reduces to the source terms") {
  const Setup2D setup{GridSpec2D{0, 1, 0, 1, 1, 1}, Material{0.5, 1.5}};
  State2D st(1);
  st.p()[0] = 2;
  st.v()[0] = 3;
  st.w()[0] = 4;
  st.u()[0] = 0.4;
  const auto d = rhs_2d_conservative(st, setup);
  CHECK(d.p()[0] == Approx(-12.0));
  CHECK(d.v()[0] == Approx(-8.0));
  CHECK(d.w()[0] == Approx(6.0));
  CHECK(d.u()[0] == 2.0);
  CHECK(2 * d.p()[0] + 0.5 * 3 * d.v()[0] + 1.5 * 4 * d.w()[0] == Approx(0.0));
}

TEST_CASE("2D schemes vanish at rest") {
  testing::Rng rng(1);
  const Setup2D setup{GridSpec2D{0, 1, 0, 1, 5, 4}, rng.material()};
  State2D st(20);
  for (auto& x : st.u()) x = 0.8;
  for (const auto& d : {rhs_2d_conservative(st, setup), rhs_2d_dissipative(st, setup)}) {
    for (double x : d.flat()) CHECK(x == 0.0);
  }
}

TEST_CASE("2D conservative scheme matches the product-rule oracle") {
  testing::Rng rng(2);
  for (auto [nx, ny] : {std::pair{3, 3}, std::pair{5, 8}, std::pair{16, 16}}) {
    const Setup2D setup{GridSpec2D{0, 1, -1, 2, nx, ny}, rng.material()};
    const auto& g = setup.grid;
    const auto& m = setup.material;
    const auto st = random_state(rng, g.size());
    const auto d = rhs_2d_conservative(st, setup);
    auto at = [&](std::span<const double> f, long i, long j) { return f[g.index(i, j)]; };
    auto phi = [&](long i, long j) { return std::cos(at(st.u(), i, j)); };
    auto psi = [&](long i, long j) { return std::sin(at(st.u(), i, j)); };
    const auto p = st.p();
    const auto v = st.v();
    const auto w = st.w();
    const double hx = 0.5 / g.dx();
    const double hy = 0.5 / g.dy();
    for (long i = 0; i < nx; ++i) {
      for (long j = 0; j < ny; ++j) {
        const double dxp = hx * (at(p, i + 1, j) - at(p, i - 1, j));
        const double dyp = hy * (at(p, i, j + 1) - at(p, i, j - 1));
        const double pv = at(p, i, j) * at(v, i, j);
        const double pw = at(p, i, j) * at(w, i, j);
        const double dp =
            m.alpha * hx * (phi(i + 1, j) * at(v, i + 1, j) - phi(i - 1, j) * at(v, i - 1, j)) +
            m.alpha * hy * (psi(i, j + 1) * at(v, i, j + 1) - psi(i, j - 1) * at(v, i, j - 1)) +
            m.beta * hx * (psi(i + 1, j) * at(w, i + 1, j) - psi(i - 1, j) * at(w, i - 1, j)) -
            m.beta * hy * (phi(i, j + 1) * at(w, i, j + 1) - phi(i, j - 1) * at(w, i, j - 1)) +
            (m.alpha - m.beta) * at(v, i, j) * at(w, i, j);
        const std::size_t o = g.index(i, j);
        CHECK(d.p()[o] == Approx(dp).epsilon(1e-12));
        CHECK(d.v()[o] == Approx(phi(i, j) * dxp + psi(i, j) * dyp - pw).epsilon(1e-12));
        CHECK(d.w()[o] == Approx(psi(i, j) * dxp - phi(i, j) * dyp + pv).epsilon(1e-12));
        CHECK(d.u()[o] == p[o]);
      }
    }
  }
}

TEST_CASE("isotropic material: transposing the grid swaps the axes") {
  // With alpha = beta and v, w built from a gradient, dp is alpha times the
  // discrete divergence of the gradient, which must transpose with the grid.
  testing::Rng rng(3);
  const int nx = 6;
  const int ny = 9;
  const double a = 1.7;
  const Setup2D setup{GridSpec2D{0, 1, 0, 2, nx, ny}, Material{a, a}};
  const Setup2D setup_t{GridSpec2D{0, 2, 0, 1, ny, nx}, Material{a, a}};
  const auto& g = setup.grid;
  const auto& gt = setup_t.grid;
  const auto u = rng.vector(g.size(), -3, 3);
  const auto gx = rng.vector(g.size(), -1, 1);
  const auto gy = rng.vector(g.size(), -1, 1);
  const std::vector<double> zero(g.size(), 0.0);
  std::vector<double> ut(g.size()), gxt(g.size()), gyt(g.size());
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      ut[gt.index(j, i)] = u[g.index(i, j)];
      gxt[gt.index(j, i)] = gy[g.index(i, j)];
      gyt[gt.index(j, i)] = gx[g.index(i, j)];
    }
  }
  const auto st = init_2d(u, zero, std::span<const double>(gx), std::span<const double>(gy), setup);
  const auto stt = init_2d(ut, zero, std::span<const double>(gxt), std::span<const double>(gyt), setup_t);
  const auto d = rhs_2d_conservative(st, setup);
  const auto dt = rhs_2d_conservative(stt, setup_t);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      const double div = a * ((gx[g.index(i + 1, j)] - gx[g.index(i - 1, j)]) / (2 * g.dx()) +
                              (gy[g.index(i, j + 1)] - gy[g.index(i, j - 1)]) / (2 * g.dy()));
      CHECK(d.p()[g.index(i, j)] == Approx(div).epsilon(1e-12));
      CHECK(dt.p()[gt.index(j, i)] == Approx(d.p()[g.index(i, j)]).epsilon(1e-12));
    }
  }
}

TEST_CASE("2D dissipative scheme") {
  testing::Rng rng(4);
  const Setup2D setup{GridSpec2D{0, 1, 0, 1, 8, 8}, rng.material()};
  const auto st = random_state(rng, 64);
  CHECK(rhs_2d_dissipative(st, setup, {0, 0, 0}) == rhs_2d_conservative(st, setup));
  CHECK_THROWS_AS((void)rhs_2d_dissipative(st, setup, {1, -1, 1}), std::invalid_argument);

  State2D flat(64);
  for (auto& x : flat.p()) x = 0.3;
  for (auto& x : flat.v()) x = -1.1;
  for (auto& x : flat.w()) x = 0.6;
  for (auto& x : flat.u()) x = 2.0;
  const auto d = rhs_2d_dissipative(flat, setup);
  const auto dc = rhs_2d_conservative(flat, setup);
  CHECK(d == dc);
  const auto& m = setup.material;
  double rate = 0.0;
  for (std::size_t k = 0; k < 64; ++k) {
    rate += flat.p()[k] * d.p()[k] + m.alpha * flat.v()[k] * d.v()[k] +
            m.beta * flat.w()[k] * d.w()[k];
  }
  CHECK(rate == Approx(0.0).scale(1.0));
}

TEST_CASE("literal angle evolution switch") {
  testing::Rng rng(5);
  Setup2D setup{GridSpec2D{0, 1, 0, 1, 4, 4}, rng.material(), AngleEvolution::by_v};
  const auto st = random_state(rng, 16);
  const auto d = rhs_2d_conservative(st, setup);
  for (std::size_t k = 0; k < 16; ++k) CHECK(d.u()[k] == st.v()[k]);
}

TEST_CASE("2D initial data") {
  const auto prob = trig_2d();
  CHECK(prob.u0(0.0, 0.25) == Approx(2.0));
  CHECK(prob.u1(0.0, 0.25) == Approx(-1.0));
  const Setup2D setup{prob.grid(8, 8), prob.material};
  const auto& g = setup.grid;
  std::vector<double> u0(g.size()), u1(g.size()), gx(g.size()), gy(g.size());
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const auto o = g.index(i, j);
      u0[o] = prob.u0(g.x(i), g.y(j));
      u1[o] = prob.u1(g.x(i), g.y(j));
      gx[o] = (*prob.u0_x)(g.x(i), g.y(j));
      gy[o] = (*prob.u0_y)(g.x(i), g.y(j));
    }
  }
  const auto st = init_2d(u0, u1, std::span<const double>(gx), std::span<const double>(gy), setup);
  for (std::size_t o = 0; o < g.size(); ++o) {
    const double lhs = st.v()[o] * st.v()[o] + st.w()[o] * st.w()[o];
    CHECK(lhs == Approx(gx[o] * gx[o] + gy[o] * gy[o]).epsilon(1e-12));
    CHECK(st.p()[o] == u1[o]);
  }
  const std::vector<double> c(g.size(), 0.7), z(g.size(), 0.0);
  const auto rest = init_2d(c, z, std::nullopt, std::nullopt, setup);
  for (std::size_t o = 0; o < g.size(); ++o) {
    CHECK(rest.p()[o] == 0.0);
    CHECK(rest.v()[o] == Approx(0.0));
    CHECK(rest.w()[o] == Approx(0.0));
  }
  CHECK_THROWS_AS((void)init_2d(c, std::vector<double>(3), std::nullopt, std::nullopt, setup),
                  std::invalid_argument);
}
