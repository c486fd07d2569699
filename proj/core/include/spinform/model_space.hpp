#pragma once

// Ambient model geometries: R^3, the unit sphere S^3 in R^4, the upper sheet of
// the hyperboloid H^3 in Minkowski space R^{3,1} (signature - + + +), and R^4.

#include <array>
#include <complex>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace spinform {

/// Vector of the flat ambient space, 3 or 4 coordinates.
using AmbientVec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 4, 1>;

enum class SpaceKind { R3, S3, H3, R4 };

std::string_view to_string(SpaceKind kind);
SpaceKind space_kind_from_string(std::string_view name);

inline constexpr double kOnSpaceTolerance = 1e-10;

struct ModelSpace {
  SpaceKind kind = SpaceKind::R3;

  static ModelSpace of(SpaceKind k) { return ModelSpace{k}; }

  int ambient_dim() const { return kind == SpaceKind::R3 ? 3 : 4; }
  /// Killing constant: 0 on flat spaces, 1/2 on S^3, i/2 on H^3.
  std::complex<double> eta() const;
  /// Sectional curvature of the model, equal to 4 eta^2.
  double curvature() const;
  bool is_quadric() const { return kind == SpaceKind::S3 || kind == SpaceKind::H3; }
  /// (-1, 1, 1, 1) for H3, all ones otherwise.
  std::array<double, 4> signature() const;

  friend bool operator==(const ModelSpace&, const ModelSpace&) = default;
};

double metric(const ModelSpace& space, const AmbientVec& u, const AmbientVec& v);

/// <p,p> - 1 for S3, <p,p> + 1 for H3 (plus x0 > 0), zero for flat spaces.
bool on_space(const ModelSpace& space, const AmbientVec& p, double tol = kOnSpaceTolerance);

/// Rescales a point of the ambient space back onto the quadric.
AmbientVec renormalize(const ModelSpace& space, const AmbientVec& p);

/// Orthogonal projection of w onto T_p N.
AmbientVec tangent_project(const ModelSpace& space, const AmbientVec& p, const AmbientVec& w);

/// Covariant derivative of a vector field sampled along a curve at parameters
/// t-2h, ..., t+2h; `point` is the curve point at the centre sample.
AmbientVec ambient_cov_deriv(const ModelSpace& space, const std::array<AmbientVec, 5>& samples,
                             double step, const AmbientVec& point);

}  // namespace spinform
