#include "spinform_cli/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

#include "CLI11.hpp"
#include "spinform/catalog.hpp"
#include "spinform/hypersurface4.hpp"

namespace spinform::cli {

namespace {

constexpr int kMaxNodes2 = 2049;
constexpr int kMaxNodes3 = 129;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <class T>
std::optional<T> parse_number(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  T value{};
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return value;
}

std::vector<int> split_ints(std::string_view text, char sep, const char* what) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    const auto part = text.substr(start, pos == std::string_view::npos ? text.npos : pos - start);
    const auto n = parse_number<int>(part);
    if (!n) throw ConfigError(std::string("malformed ") + what + ": '" + std::string(text) + "'");
    out.push_back(*n);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ConfigError(std::string(what) + " must be a positive finite number");
  }
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Verify: return "verify";
    case Command::Restrict: return "restrict";
    case Command::Convergence: return "convergence";
  }
  return "verify";
}

Command command_from_string(std::string_view name) {
  if (name == "verify") return Command::Verify;
  if (name == "restrict") return Command::Restrict;
  if (name == "convergence") return Command::Convergence;
  throw ConfigError("unknown command: " + std::string(name));
}

std::vector<int> parse_grid(std::string_view text) {
  std::string lower(trim(text));
  for (char& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  auto g = split_ints(lower, 'x', "grid");
  if (g.size() != 2 && g.size() != 3) throw ConfigError("grid must be AxB or AxBxC");
  return g;
}

std::vector<int> parse_ladder(std::string_view text) {
  return split_ints(trim(text), ',', "ladder");
}

std::complex<double> parse_eta(std::string_view text, std::complex<double> automatic) {
  const std::string_view s = trim(text);
  if (s == "auto") return automatic;
  if (!s.empty() && s.back() == 'i') {
    const std::string_view coeff = trim(s.substr(0, s.size() - 1));
    if (coeff.empty() || coeff == "+") return {0.0, 1.0};
    if (coeff == "-") return {0.0, -1.0};
    const auto v = parse_number<double>(coeff);
    if (!v || !std::isfinite(*v)) throw ConfigError("malformed eta: '" + std::string(s) + "'");
    return {0.0, *v};
  }
  const auto v = parse_number<double>(s);
  if (!v || !std::isfinite(*v)) {
    throw ConfigError("malformed eta: '" + std::string(s) +
                      "' (use auto, a real number, or an imaginary number such as 0.5i)");
  }
  return {*v, 0.0};
}

std::string format_grid(const std::vector<int>& grid) {
  std::string s;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (k) s += 'x';
    s += std::to_string(grid[k]);
  }
  return s;
}

bool is_hypersurface(const RunConfig& cfg) { return is_catalog_hypersurface(cfg.surface); }

std::vector<int> effective_grid(const RunConfig& cfg) {
  if (!cfg.grid.empty()) return cfg.grid;
  return is_hypersurface(cfg) ? std::vector<int>{16, 16, 16} : std::vector<int>{64, 64};
}

std::vector<int> effective_ladder(const RunConfig& cfg) {
  if (!cfg.ladder.empty()) return cfg.ladder;
  return is_hypersurface(cfg) ? std::vector<int>{8, 12, 16} : std::vector<int>{16, 32, 64};
}

int effective_steps(const RunConfig& cfg) {
  if (cfg.steps) return *cfg.steps;
  return cfg.command == Command::Convergence ? 1 : kDefaultStepsPerCell;
}

void validate(const RunConfig& cfg) {
  if (cfg.surface.empty()) throw ConfigError("no surface given");
  const bool hyper = is_catalog_hypersurface(cfg.surface);
  if (!hyper && !is_catalog_surface(cfg.surface)) {
    throw ConfigError("unknown surface: " + cfg.surface);
  }
  const std::size_t dims = hyper ? 3 : 2;
  const int max_nodes = hyper ? kMaxNodes3 : kMaxNodes2;

  const auto grid = effective_grid(cfg);
  if (grid.size() != dims) {
    throw ConfigError(cfg.surface + " needs a grid with " + std::to_string(dims) + " axes");
  }
  for (int n : grid) {
    if (n < kMinGridNodes) throw ConfigError("grid needs at least 5 nodes per axis");
    if (n > max_nodes) throw ConfigError("grid has too many nodes per axis");
  }

  const auto ladder = effective_ladder(cfg);
  if (ladder.size() < 3) throw ConfigError("convergence ladder needs at least 3 levels");
  for (std::size_t k = 0; k < ladder.size(); ++k) {
    if (ladder[k] < kMinGridNodes) throw ConfigError("ladder levels need at least 5 nodes");
    if (ladder[k] > max_nodes) throw ConfigError("ladder level has too many nodes per axis");
    if (k && ladder[k] <= ladder[k - 1]) throw ConfigError("ladder must be strictly increasing");
  }

  if (cfg.steps && *cfg.steps < 1) throw ConfigError("steps must be at least 1");
  require_positive(cfg.tolerance, "tolerance");
  require_positive(cfg.strict_tolerance, "strict-tolerance");
  require_positive(cfg.radius, "radius");
  require_positive(cfg.rho, "rho");
  if (cfg.surface == "geodesic_sphere_s3" && cfg.rho >= std::numbers::pi) {
    throw ConfigError("rho must lie in (0, pi) for geodesic_sphere_s3");
  }

  const auto eta = parse_eta(cfg.eta, 0.0);
  if (eta.real() != 0.0 && eta.imag() != 0.0) throw ConfigError("eta must be real or imaginary");
  if (hyper && eta != 0.0) throw ConfigError("hypersurfaces of R4 take eta = 0");
}

RunConfig parse_command_line(int argc, const char* const* argv) {
  RunConfig cfg;
  std::string command, grid;
  std::vector<int> ladder;
  int steps = 0;

  CLI::App app{"Restricted Killing spinor verifier for surfaces and hypersurfaces", "spinform"};
  app.add_option("command", command, "verify | restrict | convergence")
      ->required()
      ->check(CLI::IsMember({"verify", "restrict", "convergence"}));
  app.add_option("--surface", cfg.surface, "Catalog surface or hypersurface name")->required();
  app.add_option("--grid", grid, "Grid size AxB (surfaces) or AxBxC (hypersurfaces)");
  app.add_option("--eta", cfg.eta, "Killing constant: auto, a real number, or e.g. 0.5i")
      ->capture_default_str();
  app.add_option("--out", cfg.out, "JSON report path (stdout when omitted)");
  app.add_option("--csv", cfg.csv, "Field CSV path for restrict");
  auto* steps_opt = app.add_option("--steps", steps, "RK4 steps per grid cell");
  app.add_option("--radius", cfg.radius, "Radius parameter")->capture_default_str();
  app.add_option("--rho", cfg.rho, "Geodesic sphere radius parameter")->capture_default_str();
  app.add_option("--tolerance", cfg.tolerance, "Residual tolerance")->capture_default_str();
  app.add_option("--strict-tolerance", cfg.strict_tolerance,
                 "Tolerance for reconstruction agreement and the real-eta length law")
      ->capture_default_str();
  app.add_option("--ladder", ladder, "Convergence grid ladder, e.g. 16,32,64")->delimiter(',');
  app.set_config("--config", "", "Flat key=value configuration file");
  app.allow_config_extras(CLI::config_extras_mode::error);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  cfg.command = command_from_string(command);
  if (!grid.empty()) cfg.grid = parse_grid(grid);
  cfg.ladder = std::move(ladder);
  if (steps_opt->count() > 0) cfg.steps = steps;
  if (auto* c = app.get_config_ptr(); c && c->count() > 0) cfg.config_file = c->as<std::string>();
  validate(cfg);
  return cfg;
}

}  // namespace spinform::cli
