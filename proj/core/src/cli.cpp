#include "podkit/cli.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "podkit/bounds.hpp"
#include "podkit/container.hpp"
#include "podkit/errors.hpp"
#include "podkit/fem.hpp"
#include "podkit/inequality.hpp"
#include "podkit/manufactured.hpp"
#include "podkit/pod.hpp"
#include "podkit/reports.hpp"
#include "podkit/rom.hpp"
#include "podkit/version.hpp"

namespace podkit {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Shared option bundles
// ---------------------------------------------------------------------------

struct MeshOptions {
  std::string mesh = "interval";
  int cells = 16;
  std::string boundary = "all";
  double nu = 1.0;
};

FeProblem build_problem(const MeshOptions& opt) {
  auto domain =
      opt.mesh == "square" ? FeProblem::Domain::square : FeProblem::Domain::interval;
  if (opt.mesh != "square" && opt.mesh != "interval")
    throw InvalidArgument("unknown mesh kind: " + opt.mesh);
  auto boundary = opt.boundary == "mixed" ? FeProblem::Boundary::mixed
                                          : FeProblem::Boundary::all_dirichlet;
  if (opt.boundary != "mixed" && opt.boundary != "all")
    throw InvalidArgument("unknown boundary kind: " + opt.boundary);
  return assemble_fe(domain, opt.cells, boundary, opt.nu);
}

std::shared_ptr<const HilbertSpace> pick_space(const FeProblem& problem,
                                               const std::string& name) {
  if (name == "l2") return problem.mass_space();
  if (name == "h10") return problem.stiffness_space();
  throw InvalidArgument("unknown space (expected l2 or h10): " + name);
}

// Mode profile i on the given mesh: sin(i pi x) in 1d, sin(i pi x) sin(i pi y)
// in 2d, interpolated at the free nodes.
Eigen::VectorXd mode_profile(const FeProblem& problem, int index) {
  if (problem.domain == FeProblem::Domain::interval)
    return problem.interpolate(
        [index](double x, double) { return std::sin(index * M_PI * x); });
  return problem.interpolate([index](double x, double y) {
    return std::sin(index * M_PI * x) * std::sin(index * M_PI * y);
  });
}

ManufacturedSpec build_preset(const std::string& preset, const FeProblem& problem,
                              double duration) {
  ManufacturedSpec spec;
  std::vector<Eigen::VectorXd> profiles;
  if (preset == "smooth-periodic") {
    spec.periodic = true;
    for (int i = 1; i <= 6; ++i) {
      const double amp = std::exp(-0.7 * (i - 1));
      spec.coefficients.push_back(
          HarmonicCoefficient{amp, 2.0 * M_PI * i / duration, 0.0});
      profiles.push_back(mode_profile(problem, 2 * i - 1));
      spec.coefficients.push_back(
          HarmonicCoefficient{0.7 * amp, 2.0 * M_PI * i / duration, M_PI / 2.0});
      profiles.push_back(mode_profile(problem, 2 * i));
    }
  } else if (preset == "rank2") {
    spec.coefficients.push_back(HarmonicCoefficient{1.0, 1.0, 0.4});
    profiles.push_back(mode_profile(problem, 1));
    spec.coefficients.push_back(HarmonicCoefficient{0.8, std::sqrt(2.0), 0.0});
    profiles.push_back(mode_profile(problem, 2));
  } else if (preset == "mixed-smooth") {
    spec.coefficients.push_back(PolynomialCoefficient{{1.0, 0.5, -0.25}});
    profiles.push_back(mode_profile(problem, 1));
    spec.coefficients.push_back(ExponentialCoefficient{0.8, -0.6});
    profiles.push_back(mode_profile(problem, 2));
    spec.coefficients.push_back(HarmonicCoefficient{0.5, 2.0, 0.3});
    profiles.push_back(mode_profile(problem, 3));
  } else {
    throw InvalidArgument("unknown preset: " + preset);
  }
  spec.profiles.resize(problem.n_dofs, static_cast<Eigen::Index>(profiles.size()));
  for (std::size_t i = 0; i < profiles.size(); ++i)
    spec.profiles.col(static_cast<Eigen::Index>(i)) = profiles[i];
  return spec;
}

struct GeneratorInfo {
  std::string kind = "manufactured";
  std::string preset = "smooth-periodic";
  MeshOptions mesh;
  std::string space = "l2";
  double duration = 2.0;
  int intervals = 128;
  int substeps = 32;
};

std::string generator_to_json(const GeneratorInfo& g) {
  json j = {{"kind", g.kind},       {"preset", g.preset},   {"mesh", g.mesh.mesh},
            {"cells", g.mesh.cells}, {"boundary", g.mesh.boundary}, {"nu", g.mesh.nu},
            {"space", g.space},     {"T", g.duration},      {"M", g.intervals},
            {"substeps", g.substeps}};
  return j.dump();
}

GeneratorInfo generator_from_json(const std::string& text) {
  if (text.empty())
    throw InvalidArgument("container has no generator metadata; regenerate it with 'podkit gen'");
  json j = json::parse(text);
  GeneratorInfo g;
  g.kind = j.at("kind").get<std::string>();
  g.preset = j.at("preset").get<std::string>();
  g.mesh.mesh = j.at("mesh").get<std::string>();
  g.mesh.cells = j.at("cells").get<int>();
  g.mesh.boundary = j.at("boundary").get<std::string>();
  g.mesh.nu = j.at("nu").get<double>();
  g.space = j.at("space").get<std::string>();
  g.duration = j.at("T").get<double>();
  g.intervals = j.at("M").get<int>();
  g.substeps = j.at("substeps").get<int>();
  return g;
}

// ---------------------------------------------------------------------------
// Subcommand bodies (return process exit codes)
// ---------------------------------------------------------------------------

int run_constants(const fs::path& out, int mmax, std::uint64_t seed) {
  ReportContext context;
  context.seed = seed;
  std::vector<DhatSeed> seeds = {DhatSeed::c_b1, DhatSeed::c_b1_over_sqrt2, DhatSeed::unit};
  write_constants_report(out / "constants.json", mmax, seeds, context);

  ConstantsTable table(DhatSeed::c_b1);
  std::vector<std::vector<double>> rows;
  for (int m = 1; m <= mmax; ++m) {
    double log_value = table.log_c_m(m);
    rows.push_back({static_cast<double>(m), log_value,
                    log_value <= 700.0 ? std::exp(log_value) : INFINITY, c_m_reported(m)});
  }
  write_csv(out / "cm_table.csv", {"m", "log_c_m", "c_m", "reported"}, rows);
  std::cout << "constants: c_A = " << base_constants().c_a
            << ", c_2 = " << table.c_m(2) << " (reported 9.558)\n";
  return 0;
}

int run_check_lemmas(const fs::path& out, int trials, int max_order, std::uint64_t seed) {
  if (trials < 1) throw InvalidArgument("check-lemmas: --trials must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim_dist(1, 8);
  std::uniform_int_distribution<int> grid_dist(8, 40);

  struct Case {
    bool periodic;
    PeriodicLemma plemma;
    GeneralLemma glemma;
    int order;
  };
  std::vector<Case> cases;
  for (int k = 1; k <= max_order; ++k)
    cases.push_back({true, PeriodicLemma::summation_by_parts, {}, k});
  for (int m = 2; m <= max_order; ++m)
    cases.push_back({true, PeriodicLemma::interpolation, {}, m});
  for (int m = 1; m <= max_order; ++m)
    cases.push_back({true, PeriodicLemma::max_estimate, {}, m});
  cases.push_back({false, {}, GeneralLemma::agmon, 1});
  for (int k = 1; k <= max_order; ++k) cases.push_back({false, {}, GeneralLemma::agmon_dq, k});
  for (int k = 1; k <= max_order; ++k)
    cases.push_back({false, {}, GeneralLemma::summation_by_parts, k});
  for (int m = 2; m <= max_order; ++m)
    cases.push_back({false, {}, GeneralLemma::interpolation, m});
  for (int m = 1; m <= max_order; ++m) cases.push_back({false, {}, GeneralLemma::max_estimate, m});

  std::vector<InequalityReport> worst_reports;
  int total_violations = 0;
  for (const Case& c : cases) {
    InequalityReport worst;
    worst.ratio = -1.0;
    int violations = 0;
    for (int t = 0; t < trials; ++t) {
      const int n = dim_dist(rng);
      int m_intervals = grid_dist(rng);
      if (c.periodic && m_intervals % 2 == 1) ++m_intervals;
      auto space = make_euclidean_space(n);
      TimeGrid grid(1.0, m_intervals);
      Trajectory traj = random_trajectory(rng, space, grid, c.periodic);
      InequalityReport r = c.periodic ? check_periodic(traj, c.plemma, c.order)
                                      : check_general(traj, c.glemma, c.order);
      if (!r.pass) ++violations;
      if (r.ratio > worst.ratio) worst = r;
    }
    total_violations += violations;
    worst.aux["trials"] = static_cast<double>(trials);
    worst.aux["violations"] = static_cast<double>(violations);
    worst_reports.push_back(worst);
  }

  ReportContext context;
  context.seed = seed;
  write_inequality_batch(out / "check_lemmas.json", worst_reports, context);
  std::cout << "check-lemmas: " << cases.size() << " lemma/order cases, " << trials
            << " trials each, " << total_violations << " violations\n";
  return total_violations == 0 ? 0 : 1;
}

int run_gen(const fs::path& out, const GeneratorInfo& info) {
  FeProblem problem = build_problem(info.mesh);
  ManufacturedSpec spec = build_preset(info.preset, problem, info.duration);
  TimeGrid grid(info.duration, info.intervals);
  auto space = pick_space(problem, info.space);

  if (info.kind == "manufactured") {
    ManufacturedTrajectory mt = manufactured_trajectory(spec, space, grid);
    write_snapshot_container(out / "snapshots", mt.trajectory, false, generator_to_json(info));
  } else if (info.kind == "heat") {
    LoadSampler forcing = manufactured_heat_forcing(spec, problem);
    Eigen::VectorXd initial = spec_sampler(spec)(0.0, 0);
    Trajectory traj = heat_semidiscrete(problem, forcing, initial, grid, info.substeps);
    Trajectory in_space(grid, space, traj.values(), false);
    write_snapshot_container(out / "snapshots", in_space, false, generator_to_json(info));
  } else {
    throw InvalidArgument("unknown generator kind: " + info.kind);
  }
  std::cout << "gen: wrote " << (out / "snapshots").string() << " (N=" << problem.n_dofs
            << ", M=" << info.intervals << ")\n";
  return 0;
}

int run_pod(const fs::path& in, const fs::path& out, bool drop_first, bool subtract_mean,
            double rank_tol, std::uint64_t seed) {
  LoadedSnapshots loaded = read_snapshot_container(in);
  PodBasis basis =
      pod_from_trajectory(loaded.trajectory, loaded.trajectory.space_ptr(), drop_first,
                          subtract_mean, rank_tol);
  write_basis_container(out / "basis", basis);
  write_plot_series(PlotKind::sigma_tail, out / "sigma_tail.csv", sigma_tail_series(basis));

  // Exact-identity self check across every retained rank.
  bool identities_ok = true;
  for (int r = 0; r <= basis.rank; ++r)
    identities_ok = identities_ok && verify_energy_identity(basis, loaded.trajectory, r).pass;

  ReportContext context;
  context.seed = seed;
  context.input_digests["data.f64le"] = digest_file(in / "data.f64le");
  context.input_digests["meta.json"] = digest_file(in / "meta.json");
  json j = {{"schema", "podkit-pod-summary-v1"},
            {"tool_version", kToolVersion},
            {"J", basis.rank},
            {"weight", basis.weight},
            {"source_count", basis.source_count},
            {"drop_first", basis.drop_first},
            {"mean_subtracted", basis.mean_subtracted},
            {"energy_identity_all_r", identities_ok},
            {"sigma", json::array()},
            {"seed", context.seed},
            {"inputs", {{"data.f64le", context.input_digests["data.f64le"]},
                        {"meta.json", context.input_digests["meta.json"]}}}};
  for (int k = 0; k < basis.rank; ++k) j["sigma"].push_back(basis.sigma(k));
  std::ofstream summary(out / "pod_summary.json");
  summary << j.dump(2) << "\n";
  std::cout << "pod: J=" << basis.rank << ", energy identity "
            << (identities_ok ? "ok" : "VIOLATED") << "\n";
  return identities_ok ? 0 : 1;
}

int run_proj_errors(const fs::path& in, const fs::path& basis_dir, const fs::path& out, int r,
                    std::uint64_t seed) {
  LoadedSnapshots loaded = read_snapshot_container(in);
  PodBasis basis = read_basis_container(basis_dir);
  if (r < 0 || r > basis.rank) throw InvalidArgument("proj-errors: --r out of range");

  ProjectionErrorSeries series =
      projection_error_series(basis, r, loaded.trajectory, *basis.space);
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < series.errors.size(); ++i)
    rows.push_back({static_cast<double>(series.first_snapshot + i), series.errors[i]});
  write_csv(out / "proj_errors.csv", {"n", "error"}, rows);
  write_plot_series(PlotKind::error_vs_r, out / "error_vs_r.csv",
                    error_vs_r_series(basis, loaded.trajectory, *basis.space));
  write_plot_series(PlotKind::mode_norms, out / "mode_norms.csv",
                    mode_norm_series(basis, *loaded.trajectory.space_ptr()));

  InequalityReport energy = verify_energy_identity(basis, loaded.trajectory, r);
  InequalityReport degraded = InequalityReport::bound(
      LemmaId::degraded_pointwise, series.max_error,
      std::sqrt(static_cast<double>(basis.source_count)) * std::sqrt(basis.sigma_tail(r)));
  ReportContext context;
  context.seed = seed;
  context.input_digests["data.f64le"] = digest_file(in / "data.f64le");
  write_inequality_batch(out / "proj_summary.json", {energy, degraded}, context);
  std::cout << "proj-errors: r=" << r << " max=" << series.max_error
            << " rms=" << series.quadratic_mean << "\n";
  return energy.pass && degraded.pass ? 0 : 1;
}

int run_rom(const fs::path& in, const fs::path& basis_dir, const fs::path& out, int r,
            const std::string& scheme_name_arg, const std::string& bdf2_start,
            std::uint64_t seed) {
  LoadedSnapshots loaded = read_snapshot_container(in);
  GeneratorInfo info = generator_from_json(loaded.meta.generator_json);
  FeProblem problem = build_problem(info.mesh);
  ManufacturedSpec spec = build_preset(info.preset, problem, info.duration);

  PodBasis basis = read_basis_container(basis_dir);
  RomConfig config;
  config.rank = r;
  config.nu = problem.nu;
  if (scheme_name_arg == "euler") config.scheme = RomConfig::Scheme::euler;
  else if (scheme_name_arg == "bdf2") config.scheme = RomConfig::Scheme::bdf2;
  else throw InvalidArgument("unknown scheme: " + scheme_name_arg);
  if (bdf2_start == "project") config.bdf2_start = RomConfig::Bdf2Start::project;
  else if (bdf2_start == "euler-step") config.bdf2_start = RomConfig::Bdf2Start::euler_step;
  else throw InvalidArgument("unknown BDF2 start: " + bdf2_start);

  LoadSampler forcing = manufactured_heat_forcing(spec, problem);
  RomResult result = rom_solve(problem, basis, config, forcing, loaded.trajectory);

  std::vector<std::vector<double>> rows;
  for (std::size_t n = 0; n < result.l2_error.size(); ++n)
    rows.push_back({static_cast<double>(n), result.l2_error[n], result.projection_defect[n]});
  write_csv(out / "rom_errors.csv", {"n", "l2_error", "projection_defect"}, rows);

  json j = {{"schema", "podkit-rom-summary-v1"},
            {"tool_version", kToolVersion},
            {"scheme", scheme_name_arg},
            {"r", r},
            {"max_l2_error", result.max_l2_error},
            {"bdf2_energy_violations", result.bdf2_energy_violations},
            {"bdf2_energy_violations_doubled", result.bdf2_energy_violations_doubled},
            {"seed", seed},
            {"inputs", {{"data.f64le", digest_file(in / "data.f64le")}}}};
  std::ofstream summary(out / "rom_summary.json");
  summary << j.dump(2) << "\n";
  std::cout << "rom: scheme=" << scheme_name_arg << " max L2 error " << result.max_l2_error
            << "\n";
  return 0;
}

int run_bounds(const fs::path& in, const fs::path& out, const std::string& space_name, int r,
               const std::vector<int>& m_list, bool drop_first, bool subtract_mean,
               const std::string& cm_source_arg, std::uint64_t seed) {
  LoadedSnapshots loaded = read_snapshot_container(in);
  GeneratorInfo info = generator_from_json(loaded.meta.generator_json);
  FeProblem problem = build_problem(info.mesh);
  ManufacturedSpec spec = build_preset(info.preset, problem, info.duration);
  auto space = pick_space(problem, space_name);

  Trajectory reference(loaded.trajectory.grid(), space, loaded.trajectory.values(),
                       loaded.trajectory.periodic());
  PodBasis basis = pod_from_trajectory(reference, space, drop_first, subtract_mean);
  if (r < 0 || r > basis.rank) throw InvalidArgument("bounds: --r out of range");

  BoundOptions options;
  if (!m_list.empty()) options.m_list = m_list;
  options.cm_source =
      cm_source_arg == "reported-table" ? CmSource::reported_table : CmSource::recursion;
  if (cm_source_arg != "reported-table" && cm_source_arg != "recursion")
    throw InvalidArgument("unknown c_m source: " + cm_source_arg);

  DerivativeSampler sampler = spec_sampler(spec);
  BoundReport report = bound_report(problem, basis, r, reference, sampler, options);
  ReportContext context;
  context.seed = seed;
  context.input_digests["data.f64le"] = digest_file(in / "data.f64le");
  context.input_digests["meta.json"] = digest_file(in / "meta.json");
  write_bound_report(out / "bound_report.json", report, context);
  write_plot_series(PlotKind::mode_norms, out / "mode_norms.csv",
                    mode_norm_series(basis, *problem.mass_space()));
  for (int order : {1, 2}) {
    write_plot_series(PlotKind::deriv_norms,
                      out / ("deriv_norms_" + std::to_string(order) + ".csv"),
                      deriv_norm_series(sampler, *problem.mass_space(), info.duration, order,
                                        257));
  }
  std::cout << "bounds: space=" << space_name << " r=" << r
            << (report.all_pass() ? " all bounds dominate\n" : " VIOLATION found\n");
  return report.all_pass() ? 0 : 1;
}

int run_sweep(const fs::path& out, const std::string& table, const std::vector<int>& grids,
              int r, const MeshOptions& mesh, const std::string& preset, double duration,
              std::uint64_t seed) {
  if (table != "nondegrade") throw InvalidArgument("unknown sweep table: " + table);
  if (grids.empty()) throw InvalidArgument("sweep: --grid list must not be empty");
  FeProblem problem = build_problem(mesh);
  ManufacturedSpec spec = build_preset(preset, problem, duration);

  std::vector<std::vector<double>> rows;
  for (int m_intervals : grids) {
    TimeGrid grid(duration, m_intervals);
    ManufacturedTrajectory mt = manufactured_trajectory(spec, problem.mass_space(), grid);
    PodBasis basis = pod_from_trajectory(mt.trajectory, problem.mass_space(),
                                         /*drop_first=*/spec.periodic, /*subtract_mean=*/true);
    if (r > basis.rank) throw InvalidArgument("sweep: --r exceeds the basis rank");
    ProjectionErrorSeries series =
        projection_error_series(basis, r, mt.trajectory, *problem.mass_space());
    const double gamma = std::sqrt(basis.sigma_tail(r));
    const double baseline = std::sqrt(static_cast<double>(basis.source_count)) * gamma;
    rows.push_back({static_cast<double>(m_intervals), series.max_error, gamma, baseline});
  }
  write_csv(out / "nondegrade.csv", {"M", "max_pointwise_error", "gamma_r", "degraded_baseline"},
            rows);
  (void)seed;
  std::cout << "sweep: nondegrade table with " << grids.size() << " grids written\n";
  return 0;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args) {
  CLI::App app{"POD model-reduction toolkit: bases, discrete-inequality checks, reduced"
               " heat solver and error-bound reports"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string out_dir = ".";
  app.add_option("--seed", seed, "RNG seed stamped into every report");
  app.add_option("--out", out_dir, "output directory");

  // constants
  auto* constants_cmd = app.add_subcommand("constants", "emit the interpolation constants");
  int mmax = 10;
  constants_cmd->add_option("--mmax", mmax, "largest m in the c_m table");
  bool json_flag = false;
  constants_cmd->add_flag("--json", json_flag, "accepted for compatibility; output is JSON+CSV");

  // check-lemmas
  auto* check_cmd = app.add_subcommand("check-lemmas", "fuzz every discrete inequality");
  int trials = 200;
  int max_order = 6;
  check_cmd->add_option("--trials", trials, "random trajectories per lemma and order");
  check_cmd->add_option("--max-order", max_order, "largest difference/smoothness order");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate a snapshot container");
  GeneratorInfo gen_info;
  gen_cmd->add_option("--kind", gen_info.kind, "manufactured | heat");
  gen_cmd->add_option("--preset", gen_info.preset, "smooth-periodic | rank2 | mixed-smooth");
  gen_cmd->add_option("--mesh", gen_info.mesh.mesh, "interval | square");
  gen_cmd->add_option("--cells", gen_info.mesh.cells, "cells per side");
  gen_cmd->add_option("--boundary", gen_info.mesh.boundary, "all | mixed");
  gen_cmd->add_option("--nu", gen_info.mesh.nu, "diffusivity");
  gen_cmd->add_option("--space", gen_info.space, "l2 | h10");
  gen_cmd->add_option("--duration", gen_info.duration, "duration T");
  gen_cmd->add_option("--grid", gen_info.intervals, "interval count M");
  gen_cmd->add_option("--substeps", gen_info.substeps, "sub-integrator steps (heat kind)");

  // pod
  auto* pod_cmd = app.add_subcommand("pod", "compute a POD basis from a container");
  std::string in_dir = ".";
  bool drop_first = false, subtract_mean = false;
  double rank_tol = 1e-12;
  pod_cmd->add_option("--in", in_dir, "snapshot container directory");
  pod_cmd->add_flag("--drop-first", drop_first, "drop the first snapshot (periodic orbits)");
  pod_cmd->add_flag("--subtract-mean", subtract_mean, "subtract the snapshot mean");
  pod_cmd->add_option("--rank-tol", rank_tol, "relative eigenvalue truncation tolerance");

  // proj-errors
  auto* proj_cmd = app.add_subcommand("proj-errors", "projection error series and identities");
  std::string basis_dir = ".";
  int rank = 1;
  proj_cmd->add_option("--in", in_dir, "snapshot container directory");
  proj_cmd->add_option("--basis", basis_dir, "basis container directory");
  proj_cmd->add_option("--r", rank, "retained modes");

  // rom
  auto* rom_cmd = app.add_subcommand("rom", "run the reduced heat solver");
  std::string scheme = "euler", bdf2_start = "project";
  rom_cmd->add_option("--in", in_dir, "snapshot container directory");
  rom_cmd->add_option("--basis", basis_dir, "basis container directory");
  rom_cmd->add_option("--r", rank, "retained modes");
  rom_cmd->add_option("--scheme", scheme, "euler | bdf2");
  rom_cmd->add_option("--bdf2-start", bdf2_start, "project | euler-step");

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate every error bound");
  std::string space_name = "l2";
  std::vector<int> m_list;
  std::string cm_source = "recursion";
  bounds_cmd->add_option("--in", in_dir, "snapshot container directory");
  bounds_cmd->add_option("--space", space_name, "l2 | h10");
  bounds_cmd->add_option("--r", rank, "retained modes");
  bounds_cmd->add_option("--m", m_list, "smoothness orders (default 2 3 4 5)");
  bounds_cmd->add_flag("--drop-first", drop_first, "drop the first snapshot");
  bounds_cmd->add_flag("--subtract-mean", subtract_mean, "subtract the snapshot mean");
  bounds_cmd->add_option("--cm", cm_source, "recursion | reported-table");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "snapshot-count sweep tables");
  std::string table = "nondegrade";
  std::vector<int> grids = {64, 128, 256, 512};
  MeshOptions sweep_mesh;
  std::string sweep_preset = "smooth-periodic";
  double sweep_duration = 2.0;
  sweep_cmd->add_option("--table", table, "nondegrade");
  sweep_cmd->add_option("--grid", grids, "interval counts M")->delimiter(',');
  sweep_cmd->add_option("--r", rank, "retained modes");
  sweep_cmd->add_option("--cells", sweep_mesh.cells, "cells per side");
  sweep_cmd->add_option("--mesh", sweep_mesh.mesh, "interval | square");
  sweep_cmd->add_option("--preset", sweep_preset, "manufactured preset");
  sweep_cmd->add_option("--duration", sweep_duration, "duration T");

  std::vector<const char*> argv;
  argv.push_back("podkit");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends.
      std::cout << app.help();
      return 0;
    }
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    const fs::path out(out_dir);
    fs::create_directories(out);
    if (constants_cmd->parsed()) return run_constants(out, mmax, seed);
    if (check_cmd->parsed()) return run_check_lemmas(out, trials, max_order, seed);
    if (gen_cmd->parsed()) return run_gen(out, gen_info);
    if (pod_cmd->parsed())
      return run_pod(in_dir, out, drop_first, subtract_mean, rank_tol, seed);
    if (proj_cmd->parsed()) return run_proj_errors(in_dir, basis_dir, out, rank, seed);
    if (rom_cmd->parsed())
      return run_rom(in_dir, basis_dir, out, rank, scheme, bdf2_start, seed);
    if (bounds_cmd->parsed())
      return run_bounds(in_dir, out, space_name, rank, m_list, drop_first, subtract_mean,
                        cm_source, seed);
    if (sweep_cmd->parsed())
      return run_sweep(out, table, grids, rank, sweep_mesh, sweep_preset, sweep_duration, seed);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace podkit
