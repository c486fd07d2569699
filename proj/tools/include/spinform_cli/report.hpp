#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spinform/residual.hpp"
#include "spinform_cli/config.hpp"

namespace spinform::cli {

/// One executed identity check.
struct Check {
  ResidualReport residual;
  double tolerance = kDefaultTolerance;

  bool pass() const;
};

/// Residuals of one quantity over a grid ladder with the fitted order.
struct ConvergenceSeries {
  std::string quantity;
  std::string surface;
  std::complex<double> eta{0.0, 0.0};
  std::vector<ResidualReport> levels;
  std::vector<double> spacing;
  /// Least-squares slope of log(sup) against log(spacing); unset at the rounding floor.
  std::optional<double> order;
  double expected_order = 4.0;
  double order_tolerance = 0.5;

  bool at_floor() const { return !order.has_value(); }
  bool pass() const;
};

/// Residuals at or below this are treated as rounding noise in convergence fits.
inline constexpr double kRoundingFloor = 1e-12;

/// Fits the order of `series` from its levels; leaves it unset at the floor.
void fit_order(ConvergenceSeries& series);

struct Report {
  RunConfig config;
  std::vector<Check> checks;
  std::vector<ConvergenceSeries> series;
  /// Command-specific data (output files, recovered tensors).
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
  double wall_time_s = 0.0;

  bool pass() const;
};

nlohmann::ordered_json config_json(const RunConfig& cfg);
nlohmann::ordered_json to_json(const Report& report);

/// Exit status for a finished run: 0 when every check passes, 1 otherwise.
int exit_code(const Report& report);

}  // namespace spinform::cli
