#include "spinform_cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "spinform/catalog.hpp"
#include "spinform/killing_flow.hpp"
#include "spinform/spin_calculus.hpp"

namespace spinform::cli {

namespace {

using json = nlohmann::ordered_json;

ResidualReport make_report(std::string identity, const std::string& surface, std::complex<double> eta,
                           const std::string& grid, double sup, double l2, std::size_t nodes) {
  ResidualReport r;
  r.identity = std::move(identity);
  r.surface = surface;
  r.eta = eta;
  r.grid = grid;
  r.sup_residual = sup;
  r.l2_residual = l2;
  r.nodes = nodes;
  return r;
}

/// Collects checks for one run with the run's eta attached.
struct CheckList {
  Report& report;
  std::complex<double> eta;

  void add(ResidualReport r, double tolerance) {
    r.eta = eta;
    report.checks.push_back({std::move(r), tolerance});
  }
};

CatalogParams params_of(const RunConfig& cfg) { return {cfg.radius, cfg.rho}; }

json tensor_json(const SymTensor2& t) { return json::array({t.t11(), t.t12(), t.t22()}); }

json tensor_json(const SymTensor3& t) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) rows.push_back(json::array({t(i, 0), t(i, 1), t(i, 2)}));
  return rows;
}

void add_flatness(CheckList& checks, const std::string& surface, const std::string& grid,
                  double max_density, double rms_density, std::size_t count) {
  checks.add(make_report("flatness", surface, 0.0, grid, max_density, rms_density, count),
             kFlatnessTolerance);
}

// ---------------------------------------------------------------------------
// surfaces

ResidualReport shape_oracle(const std::shared_ptr<const SurfaceGrid>& geo) {
  const Chart& c = geo->chart();
  ResidualAccumulator acc;
  geo->grid().for_each_interior([&](NodeIndex n) {
    const FramePoint& f = geo->frame(n);
    acc.add((f.shape - c.exact->shape(f.u, f.v)).max_abs());
  });
  return acc.finish("shape_operator", c.name, 0.0, geo->grid().label());
}

ResidualReport gauss_oracle(const std::shared_ptr<const SurfaceGrid>& geo, double step,
                            std::string identity) {
  const Chart& c = geo->chart();
  const Grid2& g = geo->grid();
  ResidualAccumulator acc;
  g.for_each_interior([&](NodeIndex n) {
    const double u = g.u(n.i), v = g.v(n.j);
    acc.add(std::abs(gauss_curvature(c, u, v, step) - c.exact->gauss(u, v)));
  });
  return acc.finish(std::move(identity), c.name, 0.0, g.label());
}

struct SurfaceRun {
  Chart chart;
  std::complex<double> eta;
  std::shared_ptr<const SurfaceGrid> geo;
};

SurfaceRun surface_setup(const RunConfig& cfg, const std::vector<int>& grid) {
  Chart chart = catalog(cfg.surface, params_of(cfg));
  const auto eta = parse_eta(cfg.eta, chart.space.eta());
  auto geo = SurfaceGrid::make(chart, grid[0], grid[1]);
  return {std::move(chart), eta, std::move(geo)};
}

/// Solves on the chart; a flatness violation is recorded as a failed check.
std::optional<ChartSolution> solve_surface(const RunConfig& cfg, const SurfaceRun& run,
                                           CheckList& checks) {
  const ModifiedConnection conn(run.chart, run.eta, half_shape_source(), effective_steps(cfg));
  const std::string grid = run.geo->grid().label();
  const std::size_t cells =
      static_cast<std::size_t>(run.geo->grid().nu - 1) * (run.geo->grid().nv - 1);
  try {
    ChartSolution sol = solve_on_chart(conn, run.geo, default_seed());
    add_flatness(checks, run.chart.name, grid, sol.flatness.max_density, sol.flatness.rms_density,
                 cells);
    checks.add(make_report("path_independence", run.chart.name, 0.0, grid, sol.path_independence,
                           sol.path_independence_rms, run.geo->grid().size()),
               cfg.tolerance);
    return sol;
  } catch (const FlatnessViolation& e) {
    add_flatness(checks, run.chart.name, grid, e.density(), e.density(), cells);
    return std::nullopt;
  }
}

void verify_surface(const RunConfig& cfg, Report& report) {
  const SurfaceRun run = surface_setup(cfg, effective_grid(cfg));
  CheckList checks{report, run.eta};
  const double tol = cfg.tolerance;
  const double strict = cfg.strict_tolerance;
  const auto& geo = run.geo;
  const Grid2& g = geo->grid();

  if (run.chart.exact) {
    checks.add(shape_oracle(geo), tol);
    checks.add(gauss_oracle(geo, kBrioschiStep, "gauss_curvature"), tol);
  }

  const TensorField T = half_shape_field(geo);
  const ScalarField H = mean_curvature_field(geo);
  const GaussCodazziFields gc = gauss_codazzi_check(geo, T, run.eta);
  ResidualAccumulator gacc, cacc;
  g.for_each_interior([&](NodeIndex n) {
    gacc.add(std::abs(gc.G[n]));
    cacc.add(std::sqrt(gc.C[n].norm2()));
  });
  checks.add(gacc.finish("gauss_equation", run.chart.name, run.eta, g.label()), tol);
  checks.add(cacc.finish("codazzi_equation", run.chart.name, run.eta, g.label()), tol);

  const auto sol = solve_surface(cfg, run, checks);
  if (!sol) return;
  const SpinorField& phi = sol->field;

  checks.add(verify_restricted_equation(phi, T, run.eta), tol);
  checks.add(check_dirac_identity(phi, H, run.eta), tol);
  checks.add(check_halfspinor_identity(phi, H, run.eta), tol);
  const bool real_eta = run.eta.imag() == 0.0;
  checks.add(check_length_law(phi, run.eta), real_eta ? strict : tol);

  const TensorField em = energy_momentum(phi, run.eta);
  checks.add(compare_tensors(em, reconstruct_T_from_dirac(phi, run.eta),
                             "energy_momentum_vs_reconstruction"),
             strict);
  checks.add(compare_tensors(em, T, "energy_momentum_vs_half_shape"), tol);
  checks.add(check_trace(em, H), tol);
  checks.add(check_tpm_trace(phi, H, run.eta), tol);
  checks.add(check_tpm_antisymmetry(phi, run.eta), tol);
  checks.add(check_tpm_balance(phi, run.eta), tol);
  checks.add(check_tpm_ratio(phi, run.eta), tol);

  double sup_h = 0.0;
  g.for_each_interior([&](NodeIndex n) { sup_h = std::max(sup_h, std::abs(H[n])); });
  if (real_eta && sup_h <= tol) {
    const SpinorField star = minimal_eigenspinor(phi);
    checks.add(check_eigenspinor(star, 2.0 * run.eta), tol);
    const double var = length_variation(star);
    checks.add(make_report("eigenspinor_length", run.chart.name, run.eta, g.label(), var, var,
                           phi.values.size()),
               strict);
  }
}

void restrict_surface(const RunConfig& cfg, Report& report) {
  const SurfaceRun run = surface_setup(cfg, effective_grid(cfg));
  CheckList checks{report, run.eta};
  const auto sol = solve_surface(cfg, run, checks);
  if (!sol) {
    report.extra["csv"] = nullptr;
    return;
  }
  const SpinorField& phi = sol->field;
  const TensorField T = half_shape_field(run.geo);
  const ScalarField H = mean_curvature_field(run.geo);
  checks.add(verify_restricted_equation(phi, T, run.eta), cfg.tolerance);
  checks.add(check_dirac_identity(phi, H, run.eta), cfg.tolerance);
  const TensorField em = energy_momentum(phi, run.eta);
  checks.add(compare_tensors(em, reconstruct_T_from_dirac(phi, run.eta),
                             "energy_momentum_vs_reconstruction"),
             cfg.strict_tolerance);
  checks.add(compare_tensors(em, T, "energy_momentum_vs_half_shape"), cfg.tolerance);

  const Grid2& g = run.geo->grid();
  const NodeIndex centre{g.nu / 2, g.nv / 2};
  json rec;
  rec["u"] = g.u(centre.i);
  rec["v"] = g.v(centre.j);
  rec["energy_momentum"] = tensor_json(em[centre]);
  rec["half_shape"] = tensor_json(T[centre]);
  report.extra["recovered_tensor_at_centre"] = std::move(rec);

  const std::string path = csv_path(cfg);
  write_text(path, field_csv(phi));
  report.extra["csv"] = path;
}

void convergence_surface(const RunConfig& cfg, Report& report) {
  ConvergenceSeries transport, curvature;
  transport.quantity = "transport_path_independence";
  curvature.quantity = "gauss_curvature";
  for (int n : effective_ladder(cfg)) {
    const SurfaceRun run = surface_setup(cfg, {n, n});
    const Grid2& g = run.geo->grid();
    const double h = std::max(g.du(), g.dv());
    transport.surface = curvature.surface = run.chart.name;
    transport.eta = curvature.eta = run.eta;

    const ModifiedConnection conn(run.chart, run.eta, half_shape_source(), effective_steps(cfg));
    double sup = std::numeric_limits<double>::infinity(), rms = sup;
    try {
      const ChartSolution sol = solve_on_chart(conn, run.geo, default_seed());
      sup = sol.path_independence;
      rms = sol.path_independence_rms;
    } catch (const FlatnessViolation&) {
    }
    transport.levels.push_back(
        make_report(transport.quantity, run.chart.name, run.eta, g.label(), sup, rms, g.size()));
    transport.spacing.push_back(h);

    if (run.chart.exact) {
      ResidualReport k = gauss_oracle(run.geo, std::min(g.du(), g.dv()), curvature.quantity);
      k.eta = run.eta;
      curvature.levels.push_back(std::move(k));
      curvature.spacing.push_back(h);
    }
  }
  fit_order(transport);
  report.series.push_back(std::move(transport));
  if (!curvature.levels.empty()) {
    fit_order(curvature);
    report.series.push_back(std::move(curvature));
  }
}

// ---------------------------------------------------------------------------
// hypersurfaces

struct HyperRun {
  Chart3 chart;
  std::shared_ptr<const HypersurfaceGrid> geo;
};

HyperRun hyper_setup(const RunConfig& cfg, const std::vector<int>& grid) {
  Chart3 chart = catalog3(cfg.surface, cfg.radius);
  auto geo = HypersurfaceGrid::make(chart, grid[0], grid[1], grid[2]);
  return {std::move(chart), std::move(geo)};
}

std::size_t plaquette_count(const Grid3& g) {
  const std::size_t a = g.nu - 1, b = g.nv - 1, c = g.nw - 1;
  return a * b * g.nw + a * c * g.nv + b * c * g.nu;
}

std::optional<Solution3> solve_hyper(const RunConfig& cfg, const HyperRun& run, CheckList& checks) {
  const HypersurfaceConnection conn(run.chart, half_shape_source3(), effective_steps(cfg));
  const Grid3& g = run.geo->grid();
  try {
    Solution3 sol = solve3(conn, run.geo, default_seed());
    add_flatness(checks, run.chart.name, g.label(), sol.flatness.max_density,
                 sol.flatness.rms_density, sol.flatness.plaquettes);
    checks.add(make_report("path_independence", run.chart.name, 0.0, g.label(),
                           sol.path_independence, sol.path_independence_rms, g.size()),
               cfg.tolerance);
    return sol;
  } catch (const FlatnessViolation& e) {
    add_flatness(checks, run.chart.name, g.label(), e.density(), e.density(), plaquette_count(g));
    return std::nullopt;
  }
}

void verify_hyper(const RunConfig& cfg, Report& report) {
  const HyperRun run = hyper_setup(cfg, effective_grid(cfg));
  CheckList checks{report, 0.0};
  const double tol = cfg.tolerance;
  const Grid3& g = run.geo->grid();

  if (run.chart.exact_shape) {
    ResidualAccumulator acc;
    g.for_each_interior([&](NodeIndex3 n) {
      const Frame3Point& f = run.geo->frame(n);
      acc.add((f.shape - run.chart.exact_shape(f.u, f.v, f.w)).max_abs());
    });
    checks.add(acc.finish("shape_operator", run.chart.name, 0.0, g.label()), tol);
  }
  const TensorField3 T = half_shape_field3(run.geo);
  checks.add(gauss_components_check(T), tol);
  checks.add(codazzi3_check(run.geo, half_shape_source3()), tol);

  const auto sol = solve_hyper(cfg, run, checks);
  if (!sol) return;
  checks.add(verify_hypersurface_equation(sol->field, T), tol);
  checks.add(compare_tensors3(energy_momentum3(sol->field), T, "energy_momentum_vs_half_shape"), tol);
  const double var = length_variation3(sol->field);
  checks.add(make_report("length_law", run.chart.name, 0.0, g.label(), var, var, g.size()),
             cfg.strict_tolerance);
}

void restrict_hyper(const RunConfig& cfg, Report& report) {
  const HyperRun run = hyper_setup(cfg, effective_grid(cfg));
  CheckList checks{report, 0.0};
  const auto sol = solve_hyper(cfg, run, checks);
  if (!sol) {
    report.extra["csv"] = nullptr;
    return;
  }
  const TensorField3 T = half_shape_field3(run.geo);
  const TensorField3 em = energy_momentum3(sol->field);
  checks.add(verify_hypersurface_equation(sol->field, T), cfg.tolerance);
  checks.add(compare_tensors3(em, T, "energy_momentum_vs_half_shape"), cfg.tolerance);

  const Grid3& g = run.geo->grid();
  const NodeIndex3 centre{g.nu / 2, g.nv / 2, g.nw / 2};
  json rec;
  rec["u"] = g.u(centre.i);
  rec["v"] = g.v(centre.j);
  rec["w"] = g.w(centre.k);
  rec["energy_momentum"] = tensor_json(em[centre]);
  rec["half_shape"] = tensor_json(T[centre]);
  report.extra["recovered_tensor_at_centre"] = std::move(rec);

  const std::string path = csv_path(cfg);
  write_text(path, field_csv(sol->field));
  report.extra["csv"] = path;
}

void convergence_hyper(const RunConfig& cfg, Report& report) {
  ConvergenceSeries transport;
  transport.quantity = "transport_path_independence";
  transport.surface = cfg.surface;
  for (int n : effective_ladder(cfg)) {
    const HyperRun run = hyper_setup(cfg, {n, n, n});
    const Grid3& g = run.geo->grid();
    const HypersurfaceConnection conn(run.chart, half_shape_source3(), effective_steps(cfg));
    double sup = std::numeric_limits<double>::infinity(), rms = sup;
    try {
      const Solution3 sol = solve3(conn, run.geo, default_seed());
      sup = sol.path_independence;
      rms = sol.path_independence_rms;
    } catch (const FlatnessViolation&) {
    }
    transport.levels.push_back(
        make_report(transport.quantity, run.chart.name, 0.0, g.label(), sup, rms, g.size()));
    transport.spacing.push_back(std::max({g.du(), g.dv(), g.dw()}));
  }
  fit_order(transport);
  report.series.push_back(std::move(transport));
}

void append_row(std::ostringstream& os, std::initializer_list<double> params, const Spinor& s) {
  bool first = true;
  for (double p : params) {
    if (!first) os << ',';
    os << p;
    first = false;
  }
  for (double x : s.reals()) os << ',' << x;
  os << '\n';
}

}  // namespace

Spinor default_seed() { return Spinor{0.8, cplx(0.0, 0.6)}; }

std::string csv_path(const RunConfig& cfg) {
  if (!cfg.csv.empty()) return cfg.csv;
  if (!cfg.out.empty()) return std::filesystem::path(cfg.out).replace_extension(".csv").string();
  return cfg.surface + "_field.csv";
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot open output file: " + path);
  os << text;
  if (!os) throw ConfigError("failed writing output file: " + path);
}

std::string field_csv(const SpinorField& field) {
  std::ostringstream os;
  os.precision(17);
  os << "u,v,re_z1,im_z1,re_z2,im_z2\n";
  const Grid2& g = field.grid();
  for (int j = 0; j < g.nv; ++j)
    for (int i = 0; i < g.nu; ++i) append_row(os, {g.u(i), g.v(j)}, field[{i, j}]);
  return os.str();
}

std::string field_csv(const SpinorField3& field) {
  std::ostringstream os;
  os.precision(17);
  os << "u,v,w,re_z1,im_z1,re_z2,im_z2\n";
  const Grid3& g = field.grid();
  for (int k = 0; k < g.nw; ++k)
    for (int j = 0; j < g.nv; ++j)
      for (int i = 0; i < g.nu; ++i) append_row(os, {g.u(i), g.v(j), g.w(k)}, field[NodeIndex3{i, j, k}]);
  return os.str();
}

Report run_verify(const RunConfig& cfg) {
  Report r;
  r.config = cfg;
  is_hypersurface(cfg) ? verify_hyper(cfg, r) : verify_surface(cfg, r);
  return r;
}

Report run_restrict(const RunConfig& cfg) {
  Report r;
  r.config = cfg;
  is_hypersurface(cfg) ? restrict_hyper(cfg, r) : restrict_surface(cfg, r);
  return r;
}

Report run_convergence(const RunConfig& cfg) {
  Report r;
  r.config = cfg;
  is_hypersurface(cfg) ? convergence_hyper(cfg, r) : convergence_surface(cfg, r);
  return r;
}

Report run(const RunConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    switch (cfg.command) {
      case Command::Verify: r = run_verify(cfg); break;
      case Command::Restrict: r = run_restrict(cfg); break;
      case Command::Convergence: r = run_convergence(cfg); break;
    }
  } catch (const std::invalid_argument& e) {
    // Catalog parameter errors surface here.
    throw ConfigError(e.what());
  }
  r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace spinform::cli
