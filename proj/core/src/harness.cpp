#include "vwave/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include "json.hpp"

#if defined(__GLIBC__)
#include <malloc.h>
#endif

namespace vwave {

// ---------------------------------------------------------------------------
// Identifiers
// ---------------------------------------------------------------------------

namespace {

constexpr SchemeId kAllSchemes[] = {SchemeId::vw_cons, SchemeId::vw_diss,
                                    SchemeId::rs_cons, SchemeId::rs_diss,
                                    SchemeId::ham,     SchemeId::cons_2d,
                                    SchemeId::diss_2d};
constexpr ProblemId kAllProblems[] = {ProblemId::gaussian,
                                      ProblemId::traveling_wave,
                                      ProblemId::trig_2d};

}  // namespace

std::string_view to_string(SchemeId scheme) {
  switch (scheme) {
    case SchemeId::vw_cons: return "vw-cons";
    case SchemeId::vw_diss: return "vw-diss";
    case SchemeId::rs_cons: return "rs-cons";
    case SchemeId::rs_diss: return "rs-diss";
    case SchemeId::ham: return "ham";
    case SchemeId::cons_2d: return "2d-cons";
    case SchemeId::diss_2d: return "2d-diss";
  }
  return "unknown";
}

std::string_view to_string(ProblemId problem) {
  switch (problem) {
    case ProblemId::gaussian: return "gaussian";
    case ProblemId::traveling_wave: return "traveling-wave";
    case ProblemId::trig_2d: return "trig-2d";
  }
  return "unknown";
}

SchemeId parse_scheme(std::string_view name) {
  for (auto s : kAllSchemes) {
    if (to_string(s) == name) return s;
  }
  throw ConfigError("unknown scheme '" + std::string(name) + "'");
}

ProblemId parse_problem(std::string_view name) {
  for (auto p : kAllProblems) {
    if (to_string(p) == name) return p;
  }
  throw ConfigError("unknown problem '" + std::string(name) + "'");
}

std::string_view to_string(Comparison comparison) {
  return comparison == Comparison::cells ? "cells" : "nodes";
}

Comparison parse_comparison(std::string_view name) {
  if (name == "cells") return Comparison::cells;
  if (name == "nodes") return Comparison::nodes;
  throw ConfigError("unknown comparison '" + std::string(name) +
                    "' (expected cells or nodes)");
}

bool is_2d(SchemeId scheme) {
  return scheme == SchemeId::cons_2d || scheme == SchemeId::diss_2d;
}

bool is_2d(ProblemId problem) { return problem == ProblemId::trig_2d; }

std::vector<SchemeId> all_1d_schemes() {
  return {SchemeId::vw_cons, SchemeId::vw_diss, SchemeId::rs_cons,
          SchemeId::rs_diss, SchemeId::ham};
}

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

void RunConfig::validate() const {
  if (is_2d(problem) != is_2d(scheme)) {
    throw ConfigError("scheme " + std::string(to_string(scheme)) +
                      " does not match the dimension of problem " +
                      std::string(to_string(problem)));
  }
  if (!(theta > 0.0 && theta <= 0.5)) {
    throw ConfigError("theta must lie in (0, 0.5]");
  }
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
    throw ConfigError("t_end must be finite and >= 0");
  }
  if (n_cells < 0) throw ConfigError("nx must be >= 0");
  if (!(kappa >= 0.0 && kappa_v >= 0.0 && nu >= 0.0)) {
    throw ConfigError("viscosity coefficients must be >= 0");
  }
  for (const auto& v : {alpha, beta}) {
    if (v && !(*v > 0.0)) throw ConfigError("alpha and beta must be > 0");
  }
  if (problem == ProblemId::traveling_wave && (alpha || beta)) {
    throw ConfigError(
        "traveling-wave fixes alpha = 0.5, beta = 1.5; overrides are not "
        "allowed");
  }
  for (double t : snap_times) {
    if (!(t >= 0.0 && t <= t_end)) {
      throw ConfigError("snapshot times must lie in [0, t_end]");
    }
  }
}

int default_cells(ProblemId problem) {
  switch (problem) {
    case ProblemId::gaussian: return 30 * 16;         // dx = 2^-4
    case ProblemId::traveling_wave: return 7 * 128;   // dx = 2^-7
    case ProblemId::trig_2d: return 128;
  }
  return 0;
}

ProblemSpec1D resolve_problem_1d(const RunConfig& config) {
  ProblemSpec1D p = config.problem == ProblemId::gaussian ? gaussian_pulse()
                    : config.problem == ProblemId::traveling_wave
                        ? traveling_wave()
                        : throw ConfigError("not a 1D problem");
  if (config.alpha) p.material.alpha = *config.alpha;
  if (config.beta) p.material.beta = *config.beta;
  if (config.problem == ProblemId::gaussian && (config.alpha || config.beta)) {
    // u1 depends on the material
    const Material m = p.material;
    p.u1 = [m](double x) {
      const double u0 = std::numbers::pi / 4.0 + std::exp(-x * x);
      return -wave_speed(m, u0) * (-2.0 * x * std::exp(-x * x));
    };
  }
  return p;
}

ProblemSpec2D resolve_problem_2d(const RunConfig& config) {
  if (config.problem != ProblemId::trig_2d) {
    throw ConfigError("not a 2D problem");
  }
  ProblemSpec2D p = trig_2d();
  if (config.alpha) p.material.alpha = *config.alpha;
  if (config.beta) p.material.beta = *config.beta;
  return p;
}

const std::vector<double>& Snapshot::column(std::string_view name) const {
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (columns[k] == name) return data[k];
  }
  throw std::out_of_range("snapshot has no column " + std::string(name));
}

// ---------------------------------------------------------------------------
// Single runs
// ---------------------------------------------------------------------------

namespace {

Snapshot snapshot_1d(const GridSpec1D& grid, const StateVW& st, double t) {
  Snapshot s;
  s.t = t;
  s.t_requested = t;
  s.columns = {"x", "u", "v", "w"};
  s.data = {grid.nodes(),
            {st.u().begin(), st.u().end()},
            {st.v().begin(), st.v().end()},
            {st.w().begin(), st.w().end()}};
  return s;
}

Snapshot snapshot_2d(const GridSpec2D& grid, const State2D& st, double t) {
  Snapshot s;
  s.t = t;
  s.t_requested = t;
  s.columns = {"x", "y", "u", "p", "v", "w"};
  std::vector<double> xs(grid.size());
  std::vector<double> ys(grid.size());
  for (std::ptrdiff_t i = 0; i < grid.nx; ++i) {
    for (std::ptrdiff_t j = 0; j < grid.ny; ++j) {
      xs[grid.index(i, j)] = grid.x(i);
      ys[grid.index(i, j)] = grid.y(j);
    }
  }
  s.data = {std::move(xs),
            std::move(ys),
            {st.u().begin(), st.u().end()},
            {st.p().begin(), st.p().end()},
            {st.v().begin(), st.v().end()},
            {st.w().begin(), st.w().end()}};
  return s;
}

// Drives integrate() and collects energy samples and snapshots.
template <FlatState S, class Rhs, class UnitDt, class EnergyFn, class SnapFn>
RunResult drive(const RunConfig& cfg, double dx, S init, Rhs&& rhs,
                UnitDt&& unit_dt, EnergyFn&& energy, SnapFn&& snap) {
  std::vector<double> snap_times = cfg.snap_times;
  std::sort(snap_times.begin(), snap_times.end());
  std::size_t next_snap = 0;

  RunResult result;
  result.summary.dx = dx;
  StepControl control{cfg.theta, cfg.t_end, true};

  auto observer = [&](const StepInfo& info, const S& st) {
    const bool final_step = info.t >= cfg.t_end;
    if (info.step == 0 || final_step ||
        (cfg.energy_stride > 0 && info.step % cfg.energy_stride == 0)) {
      result.energy.record(info.t, energy(st));
    }
    while (next_snap < snap_times.size() &&
           info.t >= snap_times[next_snap]) {
      Snapshot s = snap(st, info.t);
      s.t_requested = snap_times[next_snap];
      result.snapshots.push_back(std::move(s));
      ++next_snap;
    }
  };

  auto out = integrate(std::move(init), rhs, unit_dt, control, cfg.integrator,
                       observer);
  result.summary.steps = out.steps;
  result.summary.t_final = out.t;
  result.summary.initial_energy = result.energy.samples().front().energy;
  result.summary.final_energy = result.energy.samples().back().energy;
  result.summary.energy_ratio = energy_ratio(result.summary.final_energy,
                                             result.summary.initial_energy);
  result.final_state = snap(out.state, out.t);
  return result;
}

std::vector<double> sample(const Profile1D& f, const GridSpec1D& grid) {
  std::vector<double> out(grid.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = f(grid.x(static_cast<std::ptrdiff_t>(j)));
  }
  return out;
}

std::vector<double> sample(const Profile2D& f, const GridSpec2D& grid) {
  std::vector<double> out(grid.size());
  for (std::ptrdiff_t i = 0; i < grid.nx; ++i) {
    for (std::ptrdiff_t j = 0; j < grid.ny; ++j) {
      out[grid.index(i, j)] = f(grid.x(i), grid.y(j));
    }
  }
  return out;
}

RunResult run_1d(const RunConfig& cfg) {
  const ProblemSpec1D prob = resolve_problem_1d(cfg);
  prob.material.validate();
  const int n = cfg.n_cells > 0 ? cfg.n_cells : default_cells(cfg.problem);
  const Setup1D setup{prob.grid(n), prob.material, prob.far_field};
  const auto& grid = setup.grid;
  const auto u0 = sample(prob.u0, grid);
  const auto u1 = sample(prob.u1, grid);
  std::optional<std::vector<double>> u0x;
  if (prob.u0_x) u0x = sample(*prob.u0_x, grid);
  std::optional<std::span<const double>> slope;
  if (u0x) slope = std::span<const double>(*u0x);

  auto unit_dt = [&](const auto& st) {
    return cfl_dt(grid, setup.material, st.u(), 1.0);
  };
  const ViscosityParams visc{cfg.kappa};

  switch (cfg.scheme) {
    case SchemeId::vw_cons:
    case SchemeId::vw_diss: {
      const bool diss = cfg.scheme == SchemeId::vw_diss;
      auto rhs = [&](const StateVW& s) {
        return diss ? rhs_vw_dissipative(s, setup, visc)
                    : rhs_vw_conservative(s, setup);
      };
      return drive(
          cfg, grid.dx(), init_vw(u0, u1, slope, setup), rhs, unit_dt,
          [&](const StateVW& s) { return energy_vw(s, grid); },
          [&](const StateVW& s, double t) { return snapshot_1d(grid, s, t); });
    }
    case SchemeId::rs_cons:
    case SchemeId::rs_diss: {
      const bool diss = cfg.scheme == SchemeId::rs_diss;
      auto rhs = [&](const StateRS& s) {
        return diss ? rhs_rs_dissipative(s, setup, visc)
                    : rhs_rs_conservative(s, setup);
      };
      return drive(
          cfg, grid.dx(), init_rs(u0, u1, slope, setup), rhs, unit_dt,
          [&](const StateRS& s) { return energy_rs(s, grid); },
          [&](const StateRS& s, double t) {
            return snapshot_1d(grid, to_vw(s), t);
          });
    }
    case SchemeId::ham: {
      auto rhs = [&](const StateHam& s) { return rhs_hamiltonian(s, setup); };
      return drive(
          cfg, grid.dx(), init_ham(u0, u1, setup), rhs, unit_dt,
          [&](const StateHam& s) { return energy_ham(s, setup); },
          [&](const StateHam& s, double t) {
            return snapshot_1d(grid, to_vw(s, setup), t);
          });
    }
    default:
      throw ConfigError("not a 1D scheme");
  }
}

RunResult run_2d(const RunConfig& cfg) {
  const ProblemSpec2D prob = resolve_problem_2d(cfg);
  prob.material.validate();
  const int n = cfg.n_cells > 0 ? cfg.n_cells : default_cells(cfg.problem);
  const Setup2D setup{prob.grid(n, n), prob.material, cfg.angle};
  const auto& grid = setup.grid;
  const auto u0 = sample(prob.u0, grid);
  const auto u1 = sample(prob.u1, grid);
  const auto gx = sample(*prob.u0_x, grid);
  const auto gy = sample(*prob.u0_y, grid);
  const Viscosity2D visc{cfg.kappa, cfg.kappa_v, cfg.nu};
  const bool diss = cfg.scheme == SchemeId::diss_2d;
  auto rhs = [&](const State2D& s) {
    return diss ? rhs_2d_dissipative(s, setup, visc)
                : rhs_2d_conservative(s, setup);
  };
  return drive(
      cfg, grid.dx(),
      init_2d(u0, u1, std::span<const double>(gx), std::span<const double>(gy),
              setup),
      rhs,
      [&](const State2D& s) {
        return cfl_dt(grid, setup.material, s.u(), 1.0);
      },
      [&](const State2D& s) { return energy_2d(s, setup); },
      [&](const State2D& s, double t) { return snapshot_2d(grid, s, t); });
}

nlohmann::ordered_json run_metadata(const RunConfig& cfg,
                                    const RunResult& result) {
  nlohmann::ordered_json j;
  j["problem"] = to_string(cfg.problem);
  j["scheme"] = to_string(cfg.scheme);
  j["integrator"] = to_string(cfg.integrator);
  j["n_cells"] = cfg.n_cells > 0 ? cfg.n_cells : default_cells(cfg.problem);
  j["dx"] = result.summary.dx;
  j["theta"] = cfg.theta;
  j["t_end"] = cfg.t_end;
  if (is_2d(cfg.problem)) {
    const auto p = resolve_problem_2d(cfg);
    j["alpha"] = p.material.alpha;
    j["beta"] = p.material.beta;
    j["kappa_p"] = cfg.kappa;
    j["kappa_v"] = cfg.kappa_v;
    j["nu"] = cfg.nu;
    j["angle_evolution"] =
        cfg.angle == AngleEvolution::by_p ? "u_t = p" : "u_t = v";
    j["boundary"] = "periodic";
  } else {
    const auto p = resolve_problem_1d(cfg);
    j["alpha"] = p.material.alpha;
    j["beta"] = p.material.beta;
    j["kappa"] = cfg.kappa;
    j["boundary"] =
        p.boundary == Boundary::periodic ? "periodic" : "fixed_value";
  }
  j["initial_slope"] = "analytic";
  j["steps"] = result.summary.steps;
  j["initial_energy"] = result.summary.initial_energy;
  j["final_energy"] = result.summary.final_energy;
  j["energy_ratio"] = result.summary.energy_ratio;
  auto snaps = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < result.snapshots.size(); ++k) {
    snaps.push_back({{"file", "snapshot_" + std::to_string(k) + ".csv"},
                     {"t_requested", result.snapshots[k].t_requested},
                     {"t", result.snapshots[k].t}});
  }
  j["snapshots"] = snaps;
  return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

RunResult run(const RunConfig& config) {
  config.validate();
  RunResult result = is_2d(config.problem) ? run_2d(config) : run_1d(config);
  if (!config.out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec) {
      throw std::runtime_error("cannot create " + config.out_dir.string() +
                               ": " + ec.message());
    }
    for (std::size_t k = 0; k < result.snapshots.size(); ++k) {
      write_snapshot_csv(config.out_dir / ("snapshot_" + std::to_string(k) +
                                           ".csv"),
                         result.snapshots[k]);
    }
    write_snapshot_csv(config.out_dir / "final.csv", result.final_state);
    write_energy_csv(config.out_dir / "energy.csv", result.energy);
    write_text(config.out_dir / "run.json",
               run_metadata(config, result).dump(2) + "\n");
  }
  return result;
}

// ---------------------------------------------------------------------------
// Studies
// ---------------------------------------------------------------------------

void tune_allocator() {
#if defined(__GLIBC__)
  constexpr int kLarge = 1 << 30;
  mallopt(M_MMAP_THRESHOLD, kLarge);
  mallopt(M_TRIM_THRESHOLD, kLarge);
#endif
}

std::size_t worker_count() {
  if (const char* env = std::getenv("VWAVE_WORKERS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && n > 0) return static_cast<std::size_t>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

// Evaluates fn(0..count-1) on a small pool; results keep their index, so
// the output does not depend on scheduling. The first exception is
// rethrown after all workers have stopped.
template <class Fn>
auto parallel_map(std::size_t count, Fn fn) {
  using R = decltype(fn(std::size_t{0}));
  std::vector<std::optional<R>> slots(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        slots[k] = fn(k);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const std::size_t n_workers = std::min(worker_count(), count);
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::string compact(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

void check_decreasing(const std::vector<double>& dxs) {
  if (dxs.empty()) throw ConfigError("need at least one cell size");
  for (std::size_t k = 0; k < dxs.size(); ++k) {
    if (!(dxs[k] > 0.0)) throw ConfigError("cell sizes must be positive");
    if (k > 0 && !(dxs[k] < dxs[k - 1])) {
      throw ConfigError("cell sizes must be strictly decreasing");
    }
  }
}

int cells_for(const ProblemSpec1D& prob, double dx) {
  try {
    return prob.grid_for_dx(dx).n_cells;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

void check_nested(const ProblemSpec1D& prob, double dx, double dx_ref) {
  const int nc = cells_for(prob, dx);
  const int nf = cells_for(prob, dx_ref);
  const int ratio = nc > 0 && nf % nc == 0 ? nf / nc : 0;
  if (ratio < 1 || (ratio & (ratio - 1)) != 0) {
    throw ConfigError("dx = " + compact(dx) +
                      " is not nested in the reference grid dx = " +
                      compact(dx_ref));
  }
}

double reference_distance(std::span<const double> u, const GridSpec1D& grid,
                          std::span<const double> ref,
                          const GridSpec1D& ref_grid, Comparison comparison) {
  if (comparison == Comparison::cells) {
    return rel_l2_distance_cells(u, grid, ref, ref_grid);
  }
  return rel_l2_distance(u, restrict_to_coarse(ref, ref_grid, grid));
}

RunConfig study_run(ProblemId problem, SchemeId scheme, Integrator integrator,
                    int n, double theta, double t_end, double kappa) {
  RunConfig cfg;
  cfg.problem = problem;
  cfg.scheme = scheme;
  cfg.integrator = integrator;
  cfg.n_cells = n;
  cfg.theta = theta;
  cfg.t_end = t_end;
  cfg.kappa = kappa;
  cfg.energy_stride = 0;
  return cfg;
}

}  // namespace

double Table::at(double dx, std::string_view scheme) const {
  for (const auto& r : rows) {
    if (r.dx == dx && r.scheme == scheme) return r.value;
  }
  throw std::out_of_range("table " + name + " has no row (" + compact(dx) +
                          ", " + std::string(scheme) + ")");
}

Table convergence_study(const ConvergenceSpec& spec) {
  if (is_2d(spec.problem)) {
    throw ConfigError("convergence studies are 1D only");
  }
  check_decreasing(spec.dxs);
  if (spec.schemes.empty()) throw ConfigError("need at least one scheme");
  for (auto s : spec.schemes) {
    if (is_2d(s)) throw ConfigError("convergence studies are 1D only");
  }
  RunConfig probe;
  probe.problem = spec.problem;
  const ProblemSpec1D prob = resolve_problem_1d(probe);
  if (!spec.reference && !prob.exact) {
    throw ConfigError("problem " + prob.name +
                      " has no exact solution; choose a reference scheme");
  }
  if (spec.reference) {
    for (double dx : spec.dxs) check_nested(prob, dx, spec.dx_ref);
  }

  struct Job {
    SchemeId scheme;
    double dx;
  };
  std::vector<Job> jobs;
  if (spec.reference) jobs.push_back({*spec.reference, spec.dx_ref});
  for (double dx : spec.dxs) {
    for (auto s : spec.schemes) jobs.push_back({s, dx});
  }
  auto finals = parallel_map(jobs.size(), [&](std::size_t k) {
    const auto cfg =
        study_run(spec.problem, jobs[k].scheme, spec.integrator,
                  cells_for(prob, jobs[k].dx), spec.theta, spec.t_end,
                  spec.kappa);
    return run(cfg).final_state.column("u");
  });

  Table table;
  table.name = "convergence";
  const std::size_t offset = spec.reference ? 1 : 0;
  std::size_t k = offset;
  for (double dx : spec.dxs) {
    const GridSpec1D coarse = prob.grid_for_dx(dx);
    std::vector<double> exact;
    if (!spec.reference) {
      exact.resize(coarse.size());
      for (std::size_t j = 0; j < exact.size(); ++j) {
        exact[j] = (*prob.exact)(spec.t_end,
                                 coarse.x(static_cast<std::ptrdiff_t>(j)));
      }
    }
    for (auto s : spec.schemes) {
      const auto& u = finals[k++];
      const double d =
          !spec.reference ? rel_l2_distance(u, exact)
                          : reference_distance(u, coarse, finals[0],
                                               prob.grid_for_dx(spec.dx_ref),
                                               spec.comparison);
      table.rows.push_back({dx, std::string(to_string(s)), d});
    }
  }
  table.provenance = {
      {"quantity", "d2(u_dx, u_ref)"},
      {"problem", prob.name},
      {"boundary",
       prob.boundary == Boundary::periodic ? "periodic" : "fixed_value"},
      {"reference",
       spec.reference ? std::string(to_string(*spec.reference)) : "exact"},
      {"dx_ref", spec.reference ? format_number(spec.dx_ref) : "-"},
      {"t_end", format_number(spec.t_end)},
      {"theta", format_number(spec.theta)},
      {"integrator", std::string(to_string(spec.integrator))},
      {"kappa", format_number(spec.kappa)},
      {"comparison",
       spec.reference ? std::string(to_string(spec.comparison)) : "nodes"},
      {"initial_slope", "analytic"},
  };
  return table;
}

KappaStudyResult kappa_study(const KappaStudySpec& spec) {
  check_decreasing(spec.dxs);
  if (spec.kappas.empty()) throw ConfigError("need at least one kappa");
  for (double kappa : spec.kappas) {
    if (!(kappa >= 0.0)) throw ConfigError("kappa must be >= 0");
  }
  const ProblemSpec1D prob = gaussian_pulse();
  for (double dx : spec.dxs) check_nested(prob, dx, spec.dx_ref);

  struct Job {
    double dx;
    double kappa;
  };
  std::vector<Job> jobs{{spec.dx_ref, 1.0}};
  for (double dx : spec.dxs) {
    for (double kappa : spec.kappas) jobs.push_back({dx, kappa});
  }
  struct Outcome {
    std::vector<double> u;
    double energy_ratio;
  };
  auto outcomes = parallel_map(jobs.size(), [&](std::size_t k) {
    const auto cfg = study_run(ProblemId::gaussian, SchemeId::vw_diss,
                               spec.integrator, cells_for(prob, jobs[k].dx),
                               spec.theta, spec.t_end, jobs[k].kappa);
    auto r = run(cfg);
    return Outcome{r.final_state.column("u"), r.summary.energy_ratio};
  });

  KappaStudyResult result;
  result.distance.name = "kappa_distance";
  result.energy_ratio.name = "kappa_energy_ratio";
  std::size_t k = 1;
  for (double dx : spec.dxs) {
    for (double kappa : spec.kappas) {
      const std::string label = "vw-diss:kappa=" + compact(kappa);
      result.distance.rows.push_back(
          {dx, label,
           reference_distance(outcomes[k].u, prob.grid_for_dx(dx),
                              outcomes[0].u, prob.grid_for_dx(spec.dx_ref),
                              spec.comparison)});
      result.energy_ratio.rows.push_back({dx, label, outcomes[k].energy_ratio});
      ++k;
    }
  }
  const std::vector<std::pair<std::string, std::string>> common = {
      {"problem", prob.name},
      {"boundary", "periodic"},
      {"scheme", "vw-diss"},
      {"t_end", format_number(spec.t_end)},
      {"theta", format_number(spec.theta)},
      {"integrator", std::string(to_string(spec.integrator))},
  };
  result.distance.provenance = common;
  result.distance.provenance.insert(
      result.distance.provenance.begin(),
      {"quantity", "d2(u_dx, u_ref)"});
  result.distance.provenance.push_back({"reference", "vw-diss kappa=1"});
  result.distance.provenance.push_back({"dx_ref", format_number(spec.dx_ref)});
  result.distance.provenance.push_back(
      {"comparison", std::string(to_string(spec.comparison))});
  result.energy_ratio.provenance = common;
  result.energy_ratio.provenance.insert(result.energy_ratio.provenance.begin(),
                                        {"quantity", "E_rel"});
  return result;
}

Table timestepper_study(const StepperStudySpec& spec) {
  check_decreasing(spec.dxs);
  if (spec.thetas.empty() || spec.integrators.empty()) {
    throw ConfigError("need at least one theta and one integrator");
  }
  const ProblemSpec1D prob = gaussian_pulse();
  struct Job {
    double theta;
    Integrator integrator;
    double dx;
  };
  std::vector<Job> jobs;
  for (double theta : spec.thetas) {
    for (double dx : spec.dxs) {
      for (auto integ : spec.integrators) jobs.push_back({theta, integ, dx});
    }
  }
  auto ratios = parallel_map(jobs.size(), [&](std::size_t k) {
    const auto cfg = study_run(ProblemId::gaussian, SchemeId::vw_cons,
                               jobs[k].integrator, cells_for(prob, jobs[k].dx),
                               jobs[k].theta, spec.t_end, 0.0);
    return run(cfg).summary.energy_ratio;
  });
  Table table;
  table.name = "stepper_energy_ratio";
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    table.rows.push_back({jobs[k].dx,
                          std::string(to_string(jobs[k].integrator)) +
                              ":theta=" + compact(jobs[k].theta),
                          ratios[k]});
  }
  table.provenance = {
      {"quantity", "E_rel"},
      {"problem", prob.name},
      {"boundary", "periodic"},
      {"scheme", "vw-cons"},
      {"t_end", format_number(spec.t_end)},
      {"kappa", "0"},
  };
  return table;
}

// ---------------------------------------------------------------------------
// Output
// ---------------------------------------------------------------------------

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_snapshot_csv(const std::filesystem::path& path, const Snapshot& s) {
  std::string text;
  for (std::size_t c = 0; c < s.columns.size(); ++c) {
    text += (c ? "," : "") + s.columns[c];
  }
  text += '\n';
  const std::size_t rows = s.data.empty() ? 0 : s.data[0].size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < s.data.size(); ++c) {
      if (c) text += ',';
      text += format_number(s.data[c][r]);
    }
    text += '\n';
  }
  write_text(path, text);
}

void write_energy_csv(const std::filesystem::path& path, const EnergyLog& log) {
  std::string text = "t,E\n";
  for (const auto& e : log.samples()) {
    text += format_number(e.t) + "," + format_number(e.energy) + "\n";
  }
  write_text(path, text);
}

void write_table(const std::filesystem::path& dir, const Table& table) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create " + dir.string() + ": " +
                             ec.message());
  }
  std::string text = "dx,scheme,value\n";
  for (const auto& r : table.rows) {
    text += format_number(r.dx) + "," + r.scheme + "," +
            format_number(r.value) + "\n";
  }
  write_text(dir / (table.name + ".csv"), text);
  nlohmann::ordered_json meta;
  for (const auto& [key, value] : table.provenance) meta[key] = value;
  write_text(dir / (table.name + ".meta.json"), meta.dump(2) + "\n");
}

}  // namespace vwave
