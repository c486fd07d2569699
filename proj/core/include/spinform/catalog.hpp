#pragma once

// Built-in closed-form test surfaces.
//
//   R3: plane, sphere(r), cylinder(r), catenoid
//   S3: totally_geodesic_s2, clifford_torus, geodesic_sphere_s3(rho)
//   H3: totally_geodesic_h2, horosphere, geodesic_sphere_h3(rho)
//
// Orientations are fixed so that spheres and horospheres have S = kappa Id with
// kappa > 0 (normal pointing to the centre), and the Clifford torus has
// S = diag(1, -1) in the frame (e1 along d/du).

#include <string>
#include <string_view>
#include <vector>

#include "spinform/surface_chart.hpp"

namespace spinform {

struct CatalogParams {
  double radius = 1.0;  // sphere, cylinder
  double rho = 1.0;     // geodesic spheres in S3 / H3
};

Chart catalog(std::string_view name, const CatalogParams& params = {});

const std::vector<std::string>& catalog_names();

bool is_catalog_surface(std::string_view name);

}  // namespace spinform
