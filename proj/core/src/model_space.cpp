#include "spinform/model_space.hpp"

#include <cmath>
#include <stdexcept>

#include "spinform/finite_difference.hpp"

namespace spinform {

std::string_view to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::R3: return "R3";
    case SpaceKind::S3: return "S3";
    case SpaceKind::H3: return "H3";
    case SpaceKind::R4: return "R4";
  }
  return "?";
}

SpaceKind space_kind_from_string(std::string_view name) {
  if (name == "R3") return SpaceKind::R3;
  if (name == "S3") return SpaceKind::S3;
  if (name == "H3") return SpaceKind::H3;
  if (name == "R4") return SpaceKind::R4;
  throw std::invalid_argument("unknown model space: " + std::string(name));
}

std::complex<double> ModelSpace::eta() const {
  switch (kind) {
    case SpaceKind::S3: return {0.5, 0.0};
    case SpaceKind::H3: return {0.0, 0.5};
    default: return {0.0, 0.0};
  }
}

double ModelSpace::curvature() const {
  switch (kind) {
    case SpaceKind::S3: return 1.0;
    case SpaceKind::H3: return -1.0;
    default: return 0.0;
  }
}

std::array<double, 4> ModelSpace::signature() const {
  if (kind == SpaceKind::H3) return {-1.0, 1.0, 1.0, 1.0};
  return {1.0, 1.0, 1.0, 1.0};
}

double metric(const ModelSpace& space, const AmbientVec& u, const AmbientVec& v) {
  const int n = space.ambient_dim();
  if (u.size() != n || v.size() != n) {
    throw std::invalid_argument("ambient vector dimension does not match " +
                                std::string(to_string(space.kind)));
  }
  const auto sig = space.signature();
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += sig[i] * u[i] * v[i];
  return s;
}

bool on_space(const ModelSpace& space, const AmbientVec& p, double tol) {
  if (p.size() != space.ambient_dim()) return false;
  switch (space.kind) {
    case SpaceKind::S3: return std::abs(metric(space, p, p) - 1.0) <= tol;
    case SpaceKind::H3: return std::abs(metric(space, p, p) + 1.0) <= tol && p[0] > 0.0;
    default: return true;
  }
}

AmbientVec renormalize(const ModelSpace& space, const AmbientVec& p) {
  if (!space.is_quadric()) return p;
  const double q = metric(space, p, p);
  const double target = space.kind == SpaceKind::S3 ? 1.0 : -1.0;
  if (q * target <= 0.0) throw std::domain_error("point cannot be rescaled onto the model space");
  return p / std::sqrt(q / target);
}

AmbientVec tangent_project(const ModelSpace& space, const AmbientVec& p, const AmbientVec& w) {
  if (!on_space(space, p)) throw std::domain_error("projection base point is off the model space");
  switch (space.kind) {
    case SpaceKind::S3: return w - metric(space, w, p) * p;
    case SpaceKind::H3: return w + metric(space, w, p) * p;
    default: return w;
  }
}

AmbientVec ambient_cov_deriv(const ModelSpace& space, const std::array<AmbientVec, 5>& samples,
                             double step, const AmbientVec& point) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("degenerate sampling step for covariant derivative");
  }
  return tangent_project(space, point, fd::first_from_samples(samples, step));
}

}  // namespace spinform
