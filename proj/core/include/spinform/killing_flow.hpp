#pragma once

// The restricted Killing spinor equation
//
//   nabla_X phi + T(X) . phi + eta X . omega . phi = 0
//
// read as parallel transport for the modified connection
//   nabla^_X = nabla_X + T(X) . + eta X . omega . ,
// whose flatness is equivalent to the Gauss and Codazzi equations for S = 2T.

#include <array>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "spinform/field.hpp"
#include "spinform/residual.hpp"

namespace spinform {

/// T as a function of the geometry at a point; evaluated off-grid by the integrator.
using TensorSource = std::function<SymTensor2(const FramePoint&)>;

TensorSource half_shape_source();
TensorSource constant_source(SymTensor2 t);

inline constexpr int kDefaultStepsPerCell = 4;
/// Largest accepted holonomy deviation per unit plaquette area.
inline constexpr double kFlatnessTolerance = 1e-3;

struct ModifiedConnection {
  Chart chart;
  std::complex<double> eta{0.0, 0.0};
  TensorSource tensor;
  int steps_per_cell = kDefaultStepsPerCell;

  ModifiedConnection(Chart c, std::complex<double> e, TensorSource t,
                     int steps = kDefaultStepsPerCell);

  /// Generator A with d phi / dt = -A phi along a curve with velocity (du, dv).
  Op2 generator(double u, double v, double du, double dv) const;
};

/// A curve in parameter space on t in [0, 1].
struct ParamCurve {
  std::function<std::array<double, 2>(double)> position;
  std::function<std::array<double, 2>(double)> velocity;

  static ParamCurve segment(std::array<double, 2> from, std::array<double, 2> to);
};

/// Solution operator of the transport equation along a curve (RK4, `steps` steps).
Op2 propagator(const ModifiedConnection& conn, const ParamCurve& curve, int steps);

Spinor transport(const ModifiedConnection& conn, const Spinor& phi0, const ParamCurve& curve,
                 int steps);

/// Propagators along every grid edge. u_edge(i, j) maps node (i, j) to (i+1, j);
/// v_edge(i, j) maps (i, j) to (i, j+1).
struct EdgePropagators {
  Grid2 grid;
  std::vector<Op2> u_edges;
  std::vector<Op2> v_edges;

  const Op2& u_edge(int i, int j) const { return u_edges[static_cast<std::size_t>(j) * (grid.nu - 1) + i]; }
  const Op2& v_edge(int i, int j) const { return v_edges[static_cast<std::size_t>(j) * grid.nu + i]; }
};

EdgePropagators compute_edges(const ModifiedConnection& conn, const Grid2& grid);

struct PlaquetteReport {
  NodeIndex node;
  double deviation = 0.0;  // || holonomy - Id ||_2
  double area = 0.0;
  double density() const { return area > 0.0 ? deviation / area : 0.0; }
};

struct FlatnessReport {
  std::vector<PlaquetteReport> plaquettes;
  double max_deviation = 0.0;
  double max_density = 0.0;
  double rms_density = 0.0;
  bool flat(double tolerance = kFlatnessTolerance) const { return max_density <= tolerance; }
};

FlatnessReport flatness_check(const ModifiedConnection& conn, const EdgePropagators& edges);

class FlatnessViolation : public std::runtime_error {
 public:
  FlatnessViolation(const std::string& what, double density)
      : std::runtime_error(what), density_(density) {}
  double density() const { return density_; }

 private:
  double density_;
};

struct ChartSolution {
  SpinorField field;        // u-line first, then v-lines
  double path_independence = 0.0;  // sup | field - (v-line first, then u-lines) |
  double path_independence_rms = 0.0;
  FlatnessReport flatness;
};

/// Solves nabla^ phi = 0 on the whole chart from phi0 at the lower-left node.
/// Throws FlatnessViolation when the holonomy density exceeds `tolerance`.
ChartSolution solve_on_chart(const ModifiedConnection& conn,
                             const std::shared_ptr<const SurfaceGrid>& geometry,
                             const Spinor& phi0 = Spinor{1.0, 0.0},
                             double tolerance = kFlatnessTolerance);

struct GaussCodazziFields {
  ScalarField G;                 // R_1212 - det(S) - 4 eta^2
  NodeField<TangentVec2> C;      // (nabla_e1 S)(e2) - (nabla_e2 S)(e1)
  double sup_G = 0.0;
  double sup_C = 0.0;
};

GaussCodazziFields gauss_codazzi_check(const std::shared_ptr<const SurfaceGrid>& geometry,
                                       const TensorField& T, std::complex<double> eta,
                                       double brioschi_step = kBrioschiStep);

/// max over X = e1, e2 of |nabla_X phi + T(X) . phi - i eta X . conj(phi)|
ResidualReport verify_restricted_equation(const SpinorField& field, const TensorField& T,
                                          std::complex<double> eta);

/// Spectral norm of a complex 2x2 matrix.
double operator_norm(const Op2& m);

}  // namespace spinform
