#include "spinform_cli/report.hpp"

#include <algorithm>
#include <cmath>

namespace spinform::cli {

namespace {

using json = nlohmann::ordered_json;

/// Non-finite values have no JSON encoding; they are written as strings.
json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

json residual_json(const ResidualReport& r) {
  json j;
  j["identity"] = r.identity;
  j["surface"] = r.surface;
  j["eta"] = format_eta(r.eta);
  j["grid"] = r.grid;
  j["sup_residual"] = number(r.sup_residual);
  j["l2_residual"] = number(r.l2_residual);
  return j;
}

}  // namespace

bool Check::pass() const {
  return std::isfinite(residual.sup_residual) && residual.sup_residual <= tolerance;
}

bool ConvergenceSeries::pass() const {
  if (levels.empty()) return false;
  if (at_floor()) return true;
  return std::abs(*order - expected_order) <= order_tolerance;
}

void fit_order(ConvergenceSeries& s) {
  s.order.reset();
  if (s.levels.size() < 2 || s.levels.size() != s.spacing.size()) return;
  if (s.levels.back().sup_residual < kRoundingFloor) return;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(s.levels.size());
  for (std::size_t k = 0; k < s.levels.size(); ++k) {
    const double x = std::log(s.spacing[k]);
    const double y = std::log(std::max(s.levels[k].sup_residual, 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double den = n * sxx - sx * sx;
  if (den == 0.0) return;
  s.order = (n * sxy - sx * sy) / den;
}

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); }) &&
         std::all_of(series.begin(), series.end(), [](const ConvergenceSeries& s) { return s.pass(); });
}

json config_json(const RunConfig& cfg) {
  json j;
  j["command"] = std::string(to_string(cfg.command));
  j["surface"] = cfg.surface;
  j["grid"] = format_grid(effective_grid(cfg));
  j["eta"] = cfg.eta;
  j["steps"] = effective_steps(cfg);
  j["radius"] = cfg.radius;
  j["rho"] = cfg.rho;
  j["tolerance"] = cfg.tolerance;
  j["strict_tolerance"] = cfg.strict_tolerance;
  if (cfg.command == Command::Convergence) j["ladder"] = effective_ladder(cfg);
  j["out"] = cfg.out;
  if (cfg.command == Command::Restrict) j["csv"] = cfg.csv;
  j["config_file"] = cfg.config_file;
  return j;
}

json to_json(const Report& r) {
  json j;
  j["config"] = config_json(r.config);
  json checks = json::array();
  for (const Check& c : r.checks) {
    json cj = residual_json(c.residual);
    cj["tolerance"] = c.tolerance;
    cj["pass"] = c.pass();
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  if (!r.series.empty()) {
    json series = json::array();
    for (const ConvergenceSeries& s : r.series) {
      json sj;
      sj["identity"] = s.quantity;
      sj["surface"] = s.surface;
      sj["eta"] = format_eta(s.eta);
      json levels = json::array();
      for (std::size_t k = 0; k < s.levels.size(); ++k) {
        json lj = residual_json(s.levels[k]);
        lj.erase("identity");
        lj.erase("surface");
        lj.erase("eta");
        lj["spacing"] = s.spacing[k];
        levels.push_back(std::move(lj));
      }
      sj["levels"] = std::move(levels);
      if (s.order) {
        sj["order"] = number(*s.order);
      } else {
        sj["order"] = "floor";
      }
      sj["expected_order"] = s.expected_order;
      sj["order_tolerance"] = s.order_tolerance;
      sj["pass"] = s.pass();
      series.push_back(std::move(sj));
    }
    j["convergence"] = std::move(series);
  }
  for (const auto& [key, value] : r.extra.items()) j[key] = value;
  j["pass"] = r.pass();
  j["wall_time_s"] = r.wall_time_s;
  return j;
}

int exit_code(const Report& report) { return report.pass() ? 0 : 1; }

}  // namespace spinform::cli
