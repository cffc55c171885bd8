#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "vwave/problems.hpp"
#include "vwave/schemes_1d.hpp"

using namespace vwave;
using doctest::Approx;

namespace {

// Wrapping / ghost lookup written independently of the library closure.
struct Ext {
  const std::vector<double>& g;
  bool periodic;
  double ghost;
  double operator()(long j) const {
    const long n = static_cast<long>(g.size());
    if (j >= 0 && j < n) return g[static_cast<std::size_t>(j)];
    if (periodic) return g[static_cast<std::size_t>(((j % n) + n) % n)];
    return ghost;
  }
};

std::vector<double> copy(std::span<const double> s) { return {s.begin(), s.end()}; }

StateVW random_vw(testing::Rng& rng, std::size_t n) {
  StateVW s(n);
  for (auto f : {0, 1}) {
    for (auto& x : s.field(f)) x = rng.uniform(-2, 2);
  }
  for (auto& x : s.u()) x = rng.uniform(-4, 4);
  return s;
}

// dv = c_j D0 w, dw = D0(c v): the scheme rewritten by the product rule.
void vw_oracle(const StateVW& st, const Setup1D& setup, double kappa,
               std::vector<double>& dv, std::vector<double>& dw) {
  const auto n = static_cast<long>(st.points());
  const bool per = setup.grid.boundary == Boundary::periodic;
  const auto u = copy(st.u());
  const auto v = copy(st.v());
  const auto w = copy(st.w());
  const Ext U{u, per, 0.0};
  const Ext V{v, per, 0.0};
  const Ext W{w, per, 0.0};
  auto c = [&](long j) {
    double uj = U(j);
    if (!per && j < 0) uj = setup.far_field.left;
    if (!per && j >= n) uj = setup.far_field.right;
    return wave_speed(setup.material, uj);
  };
  const double dx = setup.grid.dx();
  dv.assign(n, 0.0);
  dw.assign(n, 0.0);
  for (long j = 0; j < n; ++j) {
    dv[j] = c(j) * (W(j + 1) - W(j - 1)) / (2 * dx);
    dw[j] = (c(j + 1) * V(j + 1) - c(j - 1) * V(j - 1)) / (2 * dx);
    const double sp = std::max(c(j), c(j + 1));
    const double sm = std::max(c(j - 1), c(j));
    dv[j] += kappa / (2 * dx) * (sp * (V(j + 1) - V(j)) - sm * (V(j) - V(j - 1)));
    dw[j] += kappa / (2 * dx) * (sp * (W(j + 1) - W(j)) - sm * (W(j) - W(j - 1)));
  }
}

}  // namespace

TEST_CASE("vw schemes vanish on constant states") {
  testing::Rng rng(1);
  for (auto b : {Boundary::periodic, Boundary::fixed_value}) {
    const double ustar = rng.uniform(-3, 3);
    const Setup1D setup{GridSpec1D{0, 1, 9, b}, rng.material(), Ghosts{ustar, ustar}};
    StateVW st(9);
    for (auto& x : st.u()) x = ustar;
    for (const auto& d : {rhs_vw_conservative(st, setup), rhs_vw_dissipative(st, setup)}) {
      for (double x : d.flat()) CHECK(x == 0.0);
    }
  }
}

TEST_CASE("vw-cons hand example with unit speed") {
  const Setup1D setup{GridSpec1D{0, 3, 3, Boundary::periodic}, Material{1, 1}, {}};
  StateVW st(3);
  st.v()[1] = 1.0;
  const auto d = rhs_vw_conservative(st, setup);
  for (double x : d.v()) CHECK(x == Approx(0.0));
  CHECK(d.w()[0] == Approx(0.5));
  CHECK(d.w()[1] == Approx(0.0));
  CHECK(d.w()[2] == Approx(-0.5));
  for (int j = 0; j < 3; ++j) CHECK(d.u()[j] == st.v()[j]);
}

TEST_CASE("vw-diss hand example with unit speed") {
  const Setup1D setup{GridSpec1D{0, 3, 3, Boundary::periodic}, Material{1, 1}, {}};
  StateVW st(3);
  st.v()[1] = 1.0;
  const auto d = rhs_vw_dissipative(st, setup, {1.0});
  CHECK(d.v()[0] == Approx(0.5));
  CHECK(d.v()[1] == Approx(-1.0));
  CHECK(d.v()[2] == Approx(0.5));
}

TEST_CASE("vw schemes agree with the product-rule oracle") {
  testing::Rng rng(7);
  for (auto b : {Boundary::periodic, Boundary::fixed_value}) {
    for (std::size_t n : {4u, 16u, 64u}) {
      for (double kappa : {0.0, 1.0, 3.5}) {
        const Setup1D setup{GridSpec1D{-1, 2, static_cast<int>(n), b}, rng.material(),
                            Ghosts{rng.uniform(-1, 1), rng.uniform(2, 4)}};
        const auto st = random_vw(rng, n);
        const auto d = kappa == 0.0 ? rhs_vw_conservative(st, setup)
                                    : rhs_vw_dissipative(st, setup, {kappa});
        std::vector<double> dv;
        std::vector<double> dw;
        vw_oracle(st, setup, kappa, dv, dw);
        for (std::size_t j = 0; j < n; ++j) {
          CHECK(d.v()[j] == Approx(dv[j]).epsilon(1e-12));
          CHECK(d.w()[j] == Approx(dw[j]).epsilon(1e-12));
          CHECK(d.u()[j] == st.v()[j]);
        }
      }
    }
  }
}

TEST_CASE("dissipative schemes with zero viscosity are conservative") {
  testing::Rng rng(8);
  const Setup1D setup{testing::periodic_grid(16), rng.material(), {}};
  const auto st = random_vw(rng, 16);
  CHECK(rhs_vw_dissipative(st, setup, {0.0}) == rhs_vw_conservative(st, setup));
  StateRS rs(16);
  for (auto& x : rs.flat()) x = rng.uniform(-2, 2);
  CHECK(rhs_rs_dissipative(rs, setup, {0.0}) == rhs_rs_conservative(rs, setup));
  CHECK_THROWS_AS((void)rhs_vw_dissipative(st, setup, {-1.0}), std::invalid_argument);
  CHECK_THROWS_AS((void)rhs_rs_dissipative(rs, setup, {-1.0}), std::invalid_argument);
}

TEST_CASE("state size must match the grid") {
  const Setup1D setup{testing::periodic_grid(8), Material{}, {}};
  CHECK_THROWS_AS((void)rhs_vw_conservative(StateVW(7), setup), std::invalid_argument);
  CHECK_THROWS_AS((void)rhs_rs_conservative(StateRS(9), setup), std::invalid_argument);
  CHECK_THROWS_AS((void)rhs_hamiltonian(StateHam(3), setup), std::invalid_argument);
}

TEST_CASE("rs schemes") {
  SUBCASE("constant invariants with equal constants") {
    const Setup1D setup{testing::periodic_grid(5), Material{2, 2}, {}};
    StateRS st(5);
    for (auto& x : st.r()) x = 1.5;
    for (auto& x : st.s()) x = -0.5;
    for (auto& x : st.u()) x = 0.3;
    const auto d = rhs_rs_conservative(st, setup);
    for (int j = 0; j < 5; ++j) {
      CHECK(d.r()[j] == Approx(0.0));
      CHECK(d.s()[j] == Approx(0.0));
      CHECK(d.u()[j] == Approx(0.5));
    }
  }
  SUBCASE("hand examples with unit speed") {
    const Setup1D setup{GridSpec1D{0, 3, 3, Boundary::periodic}, Material{1, 1}, {}};
    StateRS st(3);
    st.r()[1] = 1.0;
    const auto d = rhs_rs_conservative(st, setup);
    CHECK(d.r()[0] == Approx(0.5));
    CHECK(d.r()[1] == Approx(0.0));
    CHECK(d.r()[2] == Approx(-0.5));
    for (double x : d.s()) CHECK(x == Approx(0.0));
    const auto dd = rhs_rs_dissipative(st, setup, {1.0});
    CHECK(dd.r()[0] == Approx(1.0));
    CHECK(dd.r()[1] == Approx(-1.0));
    CHECK(dd.r()[2] == Approx(0.0));
  }
  SUBCASE("random states against a direct evaluation") {
    testing::Rng rng(9);
    const std::size_t n = 16;
    const Setup1D setup{testing::periodic_grid(16, 2.0), rng.material(), {}};
    StateRS st(n);
    for (auto& x : st.flat()) x = rng.uniform(-2, 2);
    const auto r = copy(st.r());
    const auto s = copy(st.s());
    const auto u = copy(st.u());
    const Ext R{r, true, 0};
    const Ext S{s, true, 0};
    const Ext U{u, true, 0};
    auto c = [&](long j) { return wave_speed(setup.material, U(j)); };
    const double dx = setup.grid.dx();
    const double kappa = 0.7;
    const auto d = rhs_rs_dissipative(st, setup, {kappa});
    for (long j = 0; j < static_cast<long>(n); ++j) {
      const double cp = 0.5 * (c(j) + c(j + 1));
      const double cm = 0.5 * (c(j - 1) + c(j));
      const double jc = (c(j + 1) - c(j)) + (c(j) - c(j - 1));
      const double src = -(R(j) - S(j)) * jc / (4 * dx);
      const double sp = std::max(c(j), c(j + 1));
      const double sm = std::max(c(j - 1), c(j));
      const double dr = (cp * 0.5 * (R(j) + R(j + 1)) - cm * 0.5 * (R(j - 1) + R(j))) / dx + src +
                        kappa / (2 * dx) * (sp * (R(j + 1) - R(j)) - sm * (R(j) - R(j - 1)));
      const double ds = -(cp * 0.5 * (S(j) + S(j + 1)) - cm * 0.5 * (S(j - 1) + S(j))) / dx + src +
                        kappa / (2 * dx) * (sp * (S(j + 1) - S(j)) - sm * (S(j) - S(j - 1)));
      CHECK(d.r()[j] == Approx(dr).epsilon(1e-12));
      CHECK(d.s()[j] == Approx(ds).epsilon(1e-12));
      CHECK(d.u()[j] == Approx(0.5 * (R(j) + S(j))));
    }
  }
}

TEST_CASE("hamiltonian scheme") {
  SUBCASE("constant angle at rest") {
    const Setup1D setup{testing::periodic_grid(6), Material{}, {}};
    StateHam st(6);
    for (auto& x : st.u()) x = 0.9;
    const auto d = rhs_hamiltonian(st, setup);
    for (double x : d.flat()) CHECK(x == 0.0);
  }
  SUBCASE("unit speed reduces to D0 D0") {
    const Setup1D setup{GridSpec1D{0, 4, 4, Boundary::periodic}, Material{1, 1}, {}};
    StateHam st(4);
    st.u()[1] = 1.0;
    const auto d = rhs_hamiltonian(st, setup);
    CHECK(d.q()[0] == Approx(0.0));
    CHECK(d.q()[1] == Approx(-0.5));
    CHECK(d.q()[2] == Approx(0.0));
    CHECK(d.q()[3] == Approx(0.5));
    for (double x : d.u()) CHECK(x == 0.0);
  }
  SUBCASE("random states against a direct evaluation") {
    testing::Rng rng(10);
    for (auto b : {Boundary::periodic, Boundary::fixed_value}) {
      const long n = 12;
      const Setup1D setup{GridSpec1D{0, 1.5, static_cast<int>(n), b}, rng.material(),
                          Ghosts{0.2, 2.9}};
      StateHam st(n);
      for (auto& x : st.flat()) x = rng.uniform(-2, 2);
      const auto u = copy(st.u());
      auto U = [&](long j) {
        if (b == Boundary::periodic) return u[static_cast<std::size_t>((j + n) % n)];
        if (j < 0) return setup.far_field.left;
        if (j >= n) return setup.far_field.right;
        return u[static_cast<std::size_t>(j)];
      };
      const double dx = setup.grid.dx();
      auto d0 = [&](long j) { return (U(j + 1) - U(j - 1)) / (2 * dx); };
      const auto d = rhs_hamiltonian(st, setup);
      const auto& m = setup.material;
      for (long j = 0; j < n; ++j) {
        const double ccp = wave_speed(m, U(j)) * wave_speed_deriv(m, U(j));
        const double flux_p = wave_speed_sq(m, U(j + 1)) * d0(j + 1);
        const double flux_m = wave_speed_sq(m, U(j - 1)) * d0(j - 1);
        const double expect = -ccp * d0(j) * d0(j) + (flux_p - flux_m) / (2 * dx);
        CHECK(d.q()[j] == Approx(expect).epsilon(1e-12));
        CHECK(d.u()[j] == st.q()[j]);
      }
    }
  }
}

TEST_CASE("initial data conversion") {
  const auto prob = gaussian_pulse();
  const auto grid = prob.grid(480);
  const Setup1D setup{grid, prob.material, {}};
  std::vector<double> u0(480), u1(480), u0x(480);
  for (int j = 0; j < 480; ++j) {
    u0[j] = prob.u0(grid.x(j));
    u1[j] = prob.u1(grid.x(j));
    u0x[j] = (*prob.u0_x)(grid.x(j));
  }
  const auto vw = init_vw(u0, u1, std::span<const double>(u0x), setup);
  for (int j = 0; j < 480; ++j) {
    CHECK(vw.w()[j] == Approx(-u1[j]).epsilon(1e-14));
    CHECK(vw.v()[j] == u1[j]);
    CHECK(vw.u()[j] == u0[j]);
  }
  const auto rs = init_rs(u0, u1, std::span<const double>(u0x), setup);
  const auto back = to_vw(rs);
  for (int j = 0; j < 480; ++j) {
    CHECK(back.v()[j] == Approx(vw.v()[j]));
    CHECK(back.w()[j] == Approx(vw.w()[j]));
    CHECK(rs.r()[j] == Approx(vw.v()[j] + vw.w()[j]));
  }

  SUBCASE("constant angle at rest") {
    const std::vector<double> c(8, 1.2), z(8, 0.0);
    const Setup1D s8{testing::periodic_grid(8), Material{}, {}};
    const auto a = init_vw(c, z, std::nullopt, s8);
    const auto r = init_rs(c, z, std::nullopt, s8);
    const auto h = init_ham(c, z, s8);
    for (double x : a.v()) CHECK(x == 0.0);
    for (double x : a.w()) CHECK(x == 0.0);
    for (double x : r.r()) CHECK(x == 0.0);
    for (double x : r.s()) CHECK(x == 0.0);
    for (double x : h.q()) CHECK(x == 0.0);
  }
  SUBCASE("linear angle with unit speed") {
    const GridSpec1D fixed{0, 1, 10, Boundary::fixed_value};
    const Setup1D s{fixed, Material{1, 1}, Ghosts{-0.25, 2.5}};
    std::vector<double> lin(10), z(10, 0.0);
    for (int j = 0; j < 10; ++j) lin[j] = 2.5 * fixed.x(j);
    const auto a = init_vw(lin, z, std::nullopt, s);
    const auto r = init_rs(lin, z, std::nullopt, s);
    const auto h = to_vw(init_ham(lin, z, s), s);
    for (int j = 1; j < 9; ++j) {
      CHECK(a.w()[j] == Approx(2.5));
      CHECK(r.r()[j] == Approx(2.5));
      CHECK(r.s()[j] == Approx(-2.5));
      CHECK(h.w()[j] == Approx(2.5));
    }
  }
}
