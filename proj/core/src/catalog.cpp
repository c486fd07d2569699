#include "spinform/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinform {

namespace {

constexpr double kHalfWidth = 0.6;
constexpr double kHalfPi = std::numbers::pi / 2.0;

AmbientVec vec3(double a, double b, double c) {
  AmbientVec x(3);
  x << a, b, c;
  return x;
}

AmbientVec vec4(double a, double b, double c, double d) {
  AmbientVec x(4);
  x << a, b, c, d;
  return x;
}

Rect centred(double uc, double vc) {
  return {uc - kHalfWidth, uc + kHalfWidth, vc - kHalfWidth, vc + kHalfWidth};
}

ClosedForm constant_form(SymTensor2 shape, double gauss) {
  return {[shape](double, double) { return shape; }, [gauss](double, double) { return gauss; }};
}

void require_positive(double value, const char* what) {
  if (!(value > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "plane",           "sphere",          "cylinder",           "catenoid",
      "totally_geodesic_s2", "clifford_torus", "geodesic_sphere_s3", "totally_geodesic_h2",
      "horosphere",      "geodesic_sphere_h3"};
  return names;
}

bool is_catalog_surface(std::string_view name) {
  const auto& n = catalog_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

Chart catalog(std::string_view name, const CatalogParams& params) {
  Chart c;
  c.name = std::string(name);

  if (name == "plane") {
    c.space = ModelSpace::of(SpaceKind::R3);
    c.map = [](double u, double v) { return vec3(u, v, 0.0); };
    c.domain = centred(0.0, 0.0);
    c.exact = constant_form({}, 0.0);
  } else if (name == "sphere") {
    const double r = params.radius;
    require_positive(r, "radius");
    c.space = ModelSpace::of(SpaceKind::R3);
    // u azimuth, v polar angle: d/du x d/dv points inward.
    c.map = [r](double u, double v) {
      return vec3(r * std::sin(v) * std::cos(u), r * std::sin(v) * std::sin(u), r * std::cos(v));
    };
    c.domain = centred(0.0, kHalfPi);
    c.exact = constant_form((1.0 / r) * SymTensor2::identity(), 1.0 / (r * r));
  } else if (name == "cylinder") {
    const double r = params.radius;
    require_positive(r, "radius");
    c.space = ModelSpace::of(SpaceKind::R3);
    c.map = [r](double u, double v) { return vec3(r * std::cos(v), r * std::sin(v), u); };
    c.domain = centred(0.0, 0.0);
    c.exact = constant_form({0.0, 0.0, 1.0 / r}, 0.0);
  } else if (name == "catenoid") {
    c.space = ModelSpace::of(SpaceKind::R3);
    c.map = [](double u, double v) {
      return vec3(std::cosh(u) * std::cos(v), std::cosh(u) * std::sin(v), u);
    };
    c.domain = centred(0.0, 0.0);
    c.exact = ClosedForm{[](double u, double) {
                           const double k = 1.0 / (std::cosh(u) * std::cosh(u));
                           return SymTensor2{-k, 0.0, k};
                         },
                         [](double u, double) { return -std::pow(std::cosh(u), -4.0); }};
  } else if (name == "totally_geodesic_s2") {
    c.space = ModelSpace::of(SpaceKind::S3);
    c.map = [](double u, double v) {
      return vec4(std::sin(v) * std::cos(u), std::sin(v) * std::sin(u), std::cos(v), 0.0);
    };
    c.domain = centred(0.0, kHalfPi);
    c.exact = constant_form({}, 1.0);
  } else if (name == "clifford_torus") {
    c.space = ModelSpace::of(SpaceKind::S3);
    c.map = [](double u, double v) {
      const double s = std::numbers::sqrt2 / 2.0;
      return vec4(s * std::cos(u), s * std::sin(u), s * std::cos(v), s * std::sin(v));
    };
    c.domain = centred(0.0, 0.0);
    c.flip_normal = true;
    c.exact = constant_form({1.0, 0.0, -1.0}, 0.0);
  } else if (name == "geodesic_sphere_s3") {
    const double rho = params.rho;
    if (!(rho > 0.0 && rho < std::numbers::pi)) {
      throw std::invalid_argument("rho must lie in (0, pi)");
    }
    c.space = ModelSpace::of(SpaceKind::S3);
    const double sr = std::sin(rho), cr = std::cos(rho);
    c.map = [sr, cr](double u, double v) {
      return vec4(cr, sr * std::sin(v) * std::cos(u), sr * std::sin(v) * std::sin(u),
                  sr * std::cos(v));
    };
    c.domain = centred(0.0, kHalfPi);
    c.exact = constant_form((cr / sr) * SymTensor2::identity(), 1.0 / (sr * sr));
  } else if (name == "totally_geodesic_h2") {
    c.space = ModelSpace::of(SpaceKind::H3);
    c.map = [](double u, double v) {
      return vec4(std::cosh(u) * std::cosh(v), std::sinh(u) * std::cosh(v), std::sinh(v), 0.0);
    };
    c.domain = centred(0.0, 0.0);
    c.exact = constant_form({}, -1.0);
  } else if (name == "horosphere") {
    c.space = ModelSpace::of(SpaceKind::H3);
    c.map = [](double u, double v) {
      const double s = 0.5 * (u * u + v * v);
      return vec4(1.0 + s, s, u, v);
    };
    c.domain = centred(0.0, 0.0);
    c.exact = constant_form(SymTensor2::identity(), 0.0);
  } else if (name == "geodesic_sphere_h3") {
    const double rho = params.rho;
    require_positive(rho, "rho");
    c.space = ModelSpace::of(SpaceKind::H3);
    const double sr = std::sinh(rho), cr = std::cosh(rho);
    c.map = [sr, cr](double u, double v) {
      return vec4(cr, sr * std::sin(v) * std::cos(u), sr * std::sin(v) * std::sin(u),
                  sr * std::cos(v));
    };
    c.domain = centred(0.0, kHalfPi);
    c.exact = constant_form((cr / sr) * SymTensor2::identity(), 1.0 / (sr * sr));
  } else {
    throw std::invalid_argument("unknown catalog surface: " + std::string(name));
  }
  return c;
}

}  // namespace spinform
