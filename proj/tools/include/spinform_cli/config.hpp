#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spinform::cli {

/// Invalid or inconsistent run configuration. Maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help or --version was requested; what() holds the text to print.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { Verify, Restrict, Convergence };

std::string_view to_string(Command c);
Command command_from_string(std::string_view name);

inline constexpr double kDefaultTolerance = 1e-6;
inline constexpr double kDefaultStrictTolerance = 1e-8;

struct RunConfig {
  Command command = Command::Verify;
  std::string surface;
  /// (nu, nv) for surfaces, (nu, nv, nw) for hypersurfaces; empty selects the default.
  std::vector<int> grid;
  std::string eta = "auto";
  /// RK4 steps per cell; unset selects 4 (1 for convergence studies).
  std::optional<int> steps;
  double radius = 1.0;
  double rho = 1.0;
  double tolerance = kDefaultTolerance;
  /// Used for reconstruction agreement and the length law with real eta.
  double strict_tolerance = kDefaultStrictTolerance;
  /// Grid sizes per axis for convergence; empty selects the default ladder.
  std::vector<int> ladder;
  std::string out;
  std::string csv;
  std::string config_file;
};

/// "64x64" or "16x16x16".
std::vector<int> parse_grid(std::string_view text);
/// "16,32,64"
std::vector<int> parse_ladder(std::string_view text);
/// "auto", a real number, or an imaginary number written with a trailing i
/// ("0.5i", "-i"). Mixed values are rejected.
std::complex<double> parse_eta(std::string_view text, std::complex<double> automatic);

std::string format_grid(const std::vector<int>& grid);

bool is_hypersurface(const RunConfig& cfg);
/// Grid after defaults are applied.
std::vector<int> effective_grid(const RunConfig& cfg);
std::vector<int> effective_ladder(const RunConfig& cfg);
int effective_steps(const RunConfig& cfg);

/// Throws ConfigError on unknown surfaces, bad grids, bad tolerances, or an eta
/// that no supported ambient space admits.
void validate(const RunConfig& cfg);

/// Parses `spinform COMMAND [options]`. Values from --config FILE (flat
/// key=value lines, keys are option names) are overridden by flags.
RunConfig parse_command_line(int argc, const char* const* argv);

}  // namespace spinform::cli
