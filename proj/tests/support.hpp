#pragma once

// Shared helpers for the test binaries: seeded random samples and closed-form
// geometry written out independently of the library catalog.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "spinform/clifford.hpp"

namespace spinform::testing {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = 20240611) : rng_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  cplx complex() { return {uniform(-2.0, 2.0), uniform(-2.0, 2.0)}; }
  Spinor spinor() { return {complex(), complex()}; }
  TangentVec2 vec2() { return {uniform(-2.0, 2.0), uniform(-2.0, 2.0)}; }
  TangentVec3 vec3() { return {uniform(-2.0, 2.0), uniform(-2.0, 2.0), uniform(-2.0, 2.0)}; }

 private:
  std::mt19937_64 rng_;
};

inline double distance(const Spinor& a, const Spinor& b) { return (a - b).norm(); }

inline double distance(const Op2& a, const Op2& b) { return (a - b).cwiseAbs().maxCoeff(); }

/// Principal curvatures along d/du and d/dv and the Gauss curvature of a catalog
/// surface at (u, v), with the orientation conventions of the catalog.
struct SurfaceOracle {
  double k_u = 0.0;
  double k_v = 0.0;
  double gauss = 0.0;
  double ambient_curvature = 0.0;  // 4 eta^2
};

inline SurfaceOracle surface_oracle(const std::string& name, double u, double radius = 1.0,
                                    double rho = 1.0) {
  if (name == "plane") return {0.0, 0.0, 0.0, 0.0};
  if (name == "sphere") return {1.0 / radius, 1.0 / radius, 1.0 / (radius * radius), 0.0};
  if (name == "cylinder") return {0.0, 1.0 / radius, 0.0, 0.0};
  if (name == "catenoid") {
    const double c = std::cosh(u);
    return {-1.0 / (c * c), 1.0 / (c * c), -1.0 / (c * c * c * c), 0.0};
  }
  if (name == "totally_geodesic_s2") return {0.0, 0.0, 1.0, 1.0};
  if (name == "clifford_torus") return {1.0, -1.0, 0.0, 1.0};
  if (name == "geodesic_sphere_s3") {
    const double k = std::cos(rho) / std::sin(rho);
    return {k, k, 1.0 + k * k, 1.0};
  }
  if (name == "totally_geodesic_h2") return {0.0, 0.0, -1.0, -1.0};
  if (name == "horosphere") return {1.0, 1.0, 0.0, -1.0};
  if (name == "geodesic_sphere_h3") {
    const double k = std::cosh(rho) / std::sinh(rho);
    return {k, k, k * k - 1.0, -1.0};
  }
  throw std::invalid_argument("no oracle for " + name);
}

/// Killing constant of the ambient space of a catalog surface.
inline cplx killing_constant(const std::string& name) {
  const double k = surface_oracle(name, 0.0).ambient_curvature;
  if (k > 0) return {0.5, 0.0};
  if (k < 0) return {0.0, 0.5};
  return {0.0, 0.0};
}

}  // namespace spinform::testing
