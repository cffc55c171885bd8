#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vwave/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNonFinite = 2;
constexpr int kExitIo = 3;

std::vector<double> levels_to_dx(const std::vector<int>& levels) {
  std::vector<double> out;
  out.reserve(levels.size());
  for (int k : levels) out.push_back(std::ldexp(1.0, -k));
  return out;
}

void print_table(const vwave::Table& t) {
  std::cout << "# " << t.name << "\n";
  for (const auto& [k, v] : t.provenance) std::cout << "#   " << k << ": " << v << "\n";
  for (const auto& r : t.rows) {
    std::printf("%-12g %-28s %.6f\n", r.dx, r.scheme.c_str(), r.value);
  }
}

}  // namespace

int main(int argc, char** argv) {
  vwave::tune_allocator();
  CLI::App app{"Finite difference solvers for the variational wave equation"};
  app.set_config("--config", "", "key = value file mirroring the flags");
  app.require_subcommand(1);

  // run
  vwave::RunConfig rc;
  std::string problem = "gaussian";
  std::string scheme = "vw-cons";
  std::string integrator = "ssprk3";
  std::string out_dir;
  double alpha = 0.0;
  double beta = 0.0;
  bool literal_angle = false;
  auto* run_cmd = app.add_subcommand("run", "Single trajectory with snapshot and energy output");
  run_cmd->add_option("--problem", problem, "gaussian | traveling-wave | trig-2d")
      ->capture_default_str();
  run_cmd->add_option("--scheme", scheme, "vw-cons | vw-diss | rs-cons | rs-diss | ham | 2d-cons | 2d-diss")
      ->capture_default_str();
  run_cmd->add_option("--integrator", integrator, "ssprk2 | ssprk3 | rk4 | leapfrog")
      ->capture_default_str();
  run_cmd->add_option("--nx", rc.n_cells, "Cells per axis (0: problem default)");
  run_cmd->add_option("--theta", rc.theta, "CFL number")->capture_default_str();
  run_cmd->add_option("--tend", rc.t_end, "Final time")->capture_default_str();
  auto* alpha_opt = run_cmd->add_option("--alpha", alpha, "Override alpha");
  auto* beta_opt = run_cmd->add_option("--beta", beta, "Override beta");
  run_cmd->add_option("--kappa", rc.kappa, "Viscosity scale (kappa_p in 2D)")
      ->capture_default_str();
  run_cmd->add_option("--kappa-v", rc.kappa_v, "2D viscosity on v")->capture_default_str();
  run_cmd->add_option("--nu", rc.nu, "2D viscosity on w")->capture_default_str();
  run_cmd->add_option("--out", out_dir, "Output directory");
  run_cmd->add_option("--snap-times", rc.snap_times, "Snapshot times")->delimiter(',');
  run_cmd->add_option("--energy-every", rc.energy_stride,
                      "Log energy every n steps (0: ends only)")
      ->capture_default_str();
  run_cmd->add_flag("--paper-literal-u-evolution", literal_angle,
                    "2D: evolve the angle with u_t = v");

  // converge
  std::string c_problem = "gaussian";
  std::vector<std::string> c_schemes{"vw-cons", "vw-diss", "rs-cons", "rs-diss", "ham"};
  std::vector<int> c_levels{2, 3, 4, 5, 6};
  std::string c_ref = "vw-cons";
  int c_ref_level = 9;
  vwave::ConvergenceSpec cs;
  std::string c_integrator = "ssprk3";
  std::string c_out;
  auto* conv_cmd = app.add_subcommand("converge", "d2 distance to a reference solution");
  conv_cmd->add_option("--problem", c_problem)->capture_default_str();
  conv_cmd->add_option("--schemes", c_schemes)->delimiter(',')->capture_default_str();
  conv_cmd->add_option("--levels", c_levels, "dx = 2^-k, coarse to fine")
      ->delimiter(',')
      ->capture_default_str();
  conv_cmd->add_option("--ref-scheme", c_ref, "Reference scheme or 'exact'")
      ->capture_default_str();
  conv_cmd->add_option("--ref-level", c_ref_level, "dx_ref = 2^-k")->capture_default_str();
  conv_cmd->add_option("--tend", cs.t_end)->capture_default_str();
  conv_cmd->add_option("--theta", cs.theta)->capture_default_str();
  conv_cmd->add_option("--integrator", c_integrator)->capture_default_str();
  conv_cmd->add_option("--kappa", cs.kappa)->capture_default_str();
  std::string c_comparison = "cells";
  conv_cmd->add_option("--comparison", c_comparison, "cells | nodes")->capture_default_str();
  conv_cmd->add_option("--out", c_out, "Directory for the table CSV");

  // kappa-study
  vwave::KappaStudySpec ks;
  std::vector<int> k_levels{4, 5, 6};
  std::vector<double> k_kappas{0.01, 0.05, 0.1, 1, 2, 5, 10, 20};
  int k_ref_level = 9;
  std::string k_integrator = "ssprk3";
  std::string k_out;
  auto* kappa_cmd = app.add_subcommand("kappa-study", "vw-diss with scaled viscosity");
  kappa_cmd->add_option("--levels", k_levels)->delimiter(',')->capture_default_str();
  kappa_cmd->add_option("--kappas", k_kappas)->delimiter(',')->capture_default_str();
  kappa_cmd->add_option("--ref-level", k_ref_level)->capture_default_str();
  kappa_cmd->add_option("--tend", ks.t_end)->capture_default_str();
  kappa_cmd->add_option("--theta", ks.theta)->capture_default_str();
  kappa_cmd->add_option("--integrator", k_integrator)->capture_default_str();
  std::string k_comparison = "cells";
  kappa_cmd->add_option("--comparison", k_comparison, "cells | nodes")->capture_default_str();
  kappa_cmd->add_option("--out", k_out);

  // stepper-study
  vwave::StepperStudySpec ss;
  std::vector<int> s_levels{2, 3, 4, 5, 6};
  std::vector<double> s_thetas{0.1, 0.2, 0.4};
  std::vector<std::string> s_integrators{"ssprk2", "ssprk3", "rk4", "leapfrog"};
  std::string s_out;
  auto* step_cmd = app.add_subcommand("stepper-study", "E_rel of vw-cons per integrator and CFL number");
  step_cmd->add_option("--levels", s_levels)->delimiter(',')->capture_default_str();
  step_cmd->add_option("--thetas", s_thetas)->delimiter(',')->capture_default_str();
  step_cmd->add_option("--integrators", s_integrators)->delimiter(',')->capture_default_str();
  step_cmd->add_option("--tend", ss.t_end)->capture_default_str();
  step_cmd->add_option("--out", s_out);

  for (auto* sub : {run_cmd, conv_cmd, kappa_cmd, step_cmd}) sub->configurable();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run_cmd) {
      rc.problem = vwave::parse_problem(problem);
      rc.scheme = vwave::parse_scheme(scheme);
      rc.integrator = vwave::parse_integrator(integrator);
      if (alpha_opt->count() > 0) rc.alpha = alpha;
      if (beta_opt->count() > 0) rc.beta = beta;
      if (literal_angle) rc.angle = vwave::AngleEvolution::by_v;
      rc.out_dir = out_dir;
      const auto r = vwave::run(rc);
      std::printf("steps %zu  t %.6g  dx %.6g  E0 %.10g  E %.10g  E_rel %.10g\n",
                  r.summary.steps, r.summary.t_final, r.summary.dx,
                  r.summary.initial_energy, r.summary.final_energy,
                  r.summary.energy_ratio);
    } else if (*conv_cmd) {
      cs.problem = vwave::parse_problem(c_problem);
      cs.schemes.clear();
      for (const auto& s : c_schemes) cs.schemes.push_back(vwave::parse_scheme(s));
      cs.dxs = levels_to_dx(c_levels);
      if (c_ref != "exact") cs.reference = vwave::parse_scheme(c_ref);
      cs.dx_ref = std::ldexp(1.0, -c_ref_level);
      cs.integrator = vwave::parse_integrator(c_integrator);
      cs.comparison = vwave::parse_comparison(c_comparison);
      const auto table = vwave::convergence_study(cs);
      print_table(table);
      if (!c_out.empty()) vwave::write_table(c_out, table);
    } else if (*kappa_cmd) {
      ks.dxs = levels_to_dx(k_levels);
      ks.kappas = k_kappas;
      ks.dx_ref = std::ldexp(1.0, -k_ref_level);
      ks.integrator = vwave::parse_integrator(k_integrator);
      ks.comparison = vwave::parse_comparison(k_comparison);
      const auto result = vwave::kappa_study(ks);
      print_table(result.distance);
      print_table(result.energy_ratio);
      if (!k_out.empty()) {
        vwave::write_table(k_out, result.distance);
        vwave::write_table(k_out, result.energy_ratio);
      }
    } else if (*step_cmd) {
      ss.dxs = levels_to_dx(s_levels);
      ss.thetas = s_thetas;
      for (const auto& s : s_integrators) ss.integrators.push_back(vwave::parse_integrator(s));
      const auto table = vwave::timestepper_study(ss);
      print_table(table);
      if (!s_out.empty()) vwave::write_table(s_out, table);
    }
  } catch (const vwave::NonFiniteState& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonFinite;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
