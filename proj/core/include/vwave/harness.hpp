#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vwave/diagnostics.hpp"
#include "vwave/problems.hpp"
#include "vwave/schemes_2d.hpp"
#include "vwave/time_integration.hpp"

namespace vwave {

enum class SchemeId { vw_cons, vw_diss, rs_cons, rs_diss, ham, cons_2d, diss_2d };
enum class ProblemId { gaussian, traveling_wave, trig_2d };

[[nodiscard]] std::string_view to_string(SchemeId scheme);
[[nodiscard]] std::string_view to_string(ProblemId problem);
[[nodiscard]] SchemeId parse_scheme(std::string_view name);
[[nodiscard]] ProblemId parse_problem(std::string_view name);
[[nodiscard]] bool is_2d(SchemeId scheme);
[[nodiscard]] bool is_2d(ProblemId problem);

/// The five 1D schemes in table order: vw-cons, vw-diss, rs-cons, rs-diss,
/// ham.
[[nodiscard]] std::vector<SchemeId> all_1d_schemes();

/// Raised for invalid run or study configurations.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  ProblemId problem = ProblemId::gaussian;
  SchemeId scheme = SchemeId::vw_cons;
  Integrator integrator = Integrator::ssprk3;
  int n_cells = 0;  // per axis; 0 picks the problem default
  double theta = 0.05;
  double t_end = 1.0;
  std::optional<double> alpha;  // material overrides
  std::optional<double> beta;
  double kappa = 1.0;    // 1D viscosity scale; kappa_p in 2D
  double kappa_v = 1.0;  // 2D only
  double nu = 1.0;       // 2D kappa_w
  AngleEvolution angle = AngleEvolution::by_p;
  std::vector<double> snap_times;
  std::size_t energy_stride = 1;  // log every n-th step; 0 logs ends only
  std::filesystem::path out_dir;  // empty: nothing is written

  /// Throws ConfigError.
  void validate() const;
};

/// Tabular field data at one time level. 1D columns are x,u,v,w; 2D columns
/// are x,y,u,p,v,w.
struct Snapshot {
  double t_requested = 0.0;
  double t = 0.0;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> data;

  [[nodiscard]] const std::vector<double>& column(std::string_view name) const;
};

struct RunSummary {
  std::size_t steps = 0;
  double t_final = 0.0;
  double dx = 0.0;
  double initial_energy = 0.0;
  double final_energy = 0.0;
  double energy_ratio = 0.0;
};

struct RunResult {
  RunSummary summary;
  EnergyLog energy;
  std::vector<Snapshot> snapshots;  // one per requested snapshot time
  Snapshot final_state;
};

/// Problem with any material overrides from the config applied.
[[nodiscard]] ProblemSpec1D resolve_problem_1d(const RunConfig& config);
[[nodiscard]] ProblemSpec2D resolve_problem_2d(const RunConfig& config);
[[nodiscard]] int default_cells(ProblemId problem);

/// Runs one trajectory. When config.out_dir is set, writes
/// snapshot_<k>.csv, final.csv, energy.csv and run.json into it.
/// Throws NonFiniteState if the solution blows up.
[[nodiscard]] RunResult run(const RunConfig& config);

// ---------------------------------------------------------------------------
// Studies
// ---------------------------------------------------------------------------

struct TableRow {
  double dx;
  std::string scheme;
  double value;
};

/// Rows of (dx, scheme label, value) plus free-form provenance written
/// alongside the CSV.
struct Table {
  std::string name;
  std::vector<TableRow> rows;
  std::vector<std::pair<std::string, std::string>> provenance;

  /// First row matching dx and scheme; throws std::out_of_range.
  [[nodiscard]] double at(double dx, std::string_view scheme) const;
};

/// How a coarse solution is compared with a finer reference run. cells
/// holds each coarse value over its cell and measures on the reference grid;
/// nodes samples the reference at the coarse nodes.
enum class Comparison { cells, nodes };

[[nodiscard]] std::string_view to_string(Comparison comparison);
[[nodiscard]] Comparison parse_comparison(std::string_view name);

struct ConvergenceSpec {
  ProblemId problem = ProblemId::gaussian;
  std::vector<SchemeId> schemes;
  std::vector<double> dxs;              // coarse to fine
  std::optional<SchemeId> reference;    // nullopt: exact solution
  double dx_ref = 0.0;
  double t_end = 1.0;
  double theta = 0.05;
  Integrator integrator = Integrator::ssprk3;
  double kappa = 1.0;
  Comparison comparison = Comparison::cells;  // exact references use nodes
};

/// d^2 of u against the reference for every scheme and cell size.
[[nodiscard]] Table convergence_study(const ConvergenceSpec& spec);

struct KappaStudySpec {
  std::vector<double> dxs;
  std::vector<double> kappas;
  double dx_ref = 0.0;  // dissipative (kappa = 1) reference resolution
  double t_end = 10.0;
  double theta = 0.05;
  Integrator integrator = Integrator::ssprk3;
  Comparison comparison = Comparison::cells;
};

struct KappaStudyResult {
  Table distance;      // d^2 to the dissipative reference
  Table energy_ratio;  // E_rel
};

/// Gaussian pulse, vw-diss with every kappa on every grid.
[[nodiscard]] KappaStudyResult kappa_study(const KappaStudySpec& spec);

struct StepperStudySpec {
  std::vector<double> dxs;
  std::vector<double> thetas;
  std::vector<Integrator> integrators;
  double t_end = 10.0;
};

/// Gaussian pulse, vw-cons: E_rel per (theta, integrator, dx). Scheme labels
/// read "<integrator>:theta=<theta>".
[[nodiscard]] Table timestepper_study(const StepperStudySpec& spec);

// ---------------------------------------------------------------------------
// Output
// ---------------------------------------------------------------------------

/// 17 significant digits, locale independent.
[[nodiscard]] std::string format_number(double x);

void write_snapshot_csv(const std::filesystem::path& path, const Snapshot& s);
void write_energy_csv(const std::filesystem::path& path, const EnergyLog& log);
/// Writes <dir>/<table.name>.csv (header dx,scheme,value) and
/// <dir>/<table.name>.meta.json with the provenance.
void write_table(const std::filesystem::path& dir, const Table& table);

/// Keeps large field buffers on the heap instead of mapping and unmapping
/// them on every stage (glibc only; no-op elsewhere). Call once from main.
void tune_allocator();

/// Worker count for studies: $VWAVE_WORKERS if set and positive, else the
/// hardware concurrency.
[[nodiscard]] std::size_t worker_count();

}  // namespace vwave
