#include "spinform/killing_flow.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/LU>

#include "spinform/spin_calculus.hpp"

namespace spinform {

TensorSource half_shape_source() {
  return [](const FramePoint& f) { return 0.5 * f.shape; };
}

TensorSource constant_source(SymTensor2 t) {
  return [t](const FramePoint&) { return t; };
}

ModifiedConnection::ModifiedConnection(Chart c, std::complex<double> e, TensorSource t, int steps)
    : chart(std::move(c)), eta(e), tensor(std::move(t)), steps_per_cell(steps) {
  if (eta.real() != 0.0 && eta.imag() != 0.0) {
    throw std::invalid_argument("Killing constant must be real or purely imaginary");
  }
  if (steps_per_cell < 1) throw std::invalid_argument("steps per cell must be positive");
  if (!tensor) throw std::invalid_argument("modified connection needs a tensor source");
}

Op2 ModifiedConnection::generator(double u, double v, double du, double dv) const {
  const FramePoint f = frame_at(chart, u, v);
  const TangentVec2 x = f.frame_coeffs(du, dv);
  const Op2& omega = clifford::volume2_matrix();
  return (0.5 * f.omega_along(du, dv)) * omega + clifford::matrix2(tensor(f).apply(x)) +
         eta * clifford::matrix2(x) * omega;
}

ParamCurve ParamCurve::segment(std::array<double, 2> from, std::array<double, 2> to) {
  const std::array<double, 2> d{to[0] - from[0], to[1] - from[1]};
  return {[from, d](double t) { return std::array<double, 2>{from[0] + t * d[0], from[1] + t * d[1]}; },
          [d](double) { return d; }};
}

Op2 propagator(const ModifiedConnection& conn, const ParamCurve& curve, int steps) {
  if (steps < 1) throw std::invalid_argument("propagator: step count must be positive");
  auto gen = [&](double t) {
    const auto p = curve.position(t);
    if (!conn.chart.domain.contains(p[0], p[1])) {
      throw std::out_of_range("transport: curve exits the chart domain");
    }
    const auto dp = curve.velocity(t);
    return Op2(-conn.generator(p[0], p[1], dp[0], dp[1]));
  };
  const double h = 1.0 / steps;
  Op2 U = Op2::Identity();
  Op2 a0 = gen(0.0);
  for (int s = 0; s < steps; ++s) {
    const double t = s * h;
    const Op2 am = gen(t + 0.5 * h);
    const Op2 a1 = gen(t + h);
    const Op2 k1 = a0 * U;
    const Op2 k2 = am * (U + 0.5 * h * k1);
    const Op2 k3 = am * (U + 0.5 * h * k2);
    const Op2 k4 = a1 * (U + h * k3);
    U += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    a0 = a1;
  }
  return U;
}

Spinor transport(const ModifiedConnection& conn, const Spinor& phi0, const ParamCurve& curve,
                 int steps) {
  return act(propagator(conn, curve, steps), phi0);
}

EdgePropagators compute_edges(const ModifiedConnection& conn, const Grid2& grid) {
  EdgePropagators e;
  e.grid = grid;
  e.u_edges.resize(static_cast<std::size_t>(grid.nu - 1) * grid.nv);
  e.v_edges.resize(static_cast<std::size_t>(grid.nu) * (grid.nv - 1));
  for (int j = 0; j < grid.nv; ++j)
    for (int i = 0; i + 1 < grid.nu; ++i)
      e.u_edges[static_cast<std::size_t>(j) * (grid.nu - 1) + i] = propagator(
          conn, ParamCurve::segment({grid.u(i), grid.v(j)}, {grid.u(i + 1), grid.v(j)}),
          conn.steps_per_cell);
  for (int j = 0; j + 1 < grid.nv; ++j)
    for (int i = 0; i < grid.nu; ++i)
      e.v_edges[static_cast<std::size_t>(j) * grid.nu + i] = propagator(
          conn, ParamCurve::segment({grid.u(i), grid.v(j)}, {grid.u(i), grid.v(j + 1)}),
          conn.steps_per_cell);
  return e;
}

double operator_norm(const Op2& m) {
  const Op2 h = m.adjoint() * m;
  const double tr = h.trace().real();
  const double det = std::abs(h.determinant());
  const double disc = std::max(0.0, tr * tr - 4.0 * det);
  return std::sqrt(std::max(0.0, 0.5 * (tr + std::sqrt(disc))));
}

FlatnessReport flatness_check(const ModifiedConnection& conn, const EdgePropagators& edges) {
  const Grid2& g = edges.grid;
  FlatnessReport r;
  r.plaquettes.reserve(static_cast<std::size_t>(g.nu - 1) * (g.nv - 1));
  for (int j = 0; j + 1 < g.nv; ++j) {
    for (int i = 0; i + 1 < g.nu; ++i) {
      const Op2 loop = edges.v_edge(i, j).inverse() * edges.u_edge(i, j + 1).inverse() *
                       edges.v_edge(i + 1, j) * edges.u_edge(i, j);
      PlaquetteReport p;
      p.node = {i, j};
      p.deviation = operator_norm(loop - Op2::Identity());
      const FramePoint f = frame_at(conn.chart, g.u(i) + 0.5 * g.du(), g.v(j) + 0.5 * g.dv());
      p.area = std::abs(f.coord_to_frame.determinant()) * g.du() * g.dv();
      r.max_deviation = std::max(r.max_deviation, p.deviation);
      r.max_density = std::max(r.max_density, p.density());
      r.rms_density += p.density() * p.density();
      r.plaquettes.push_back(p);
    }
  }
  if (!r.plaquettes.empty()) r.rms_density = std::sqrt(r.rms_density / r.plaquettes.size());
  return r;
}

ChartSolution solve_on_chart(const ModifiedConnection& conn,
                             const std::shared_ptr<const SurfaceGrid>& geometry, const Spinor& phi0,
                             double tolerance) {
  const Grid2& g = geometry->grid();
  const EdgePropagators edges = compute_edges(conn, g);
  ChartSolution sol;
  sol.flatness = flatness_check(conn, edges);
  if (!sol.flatness.flat(tolerance)) {
    throw FlatnessViolation("modified connection is not flat: holonomy density " +
                                std::to_string(sol.flatness.max_density),
                            sol.flatness.max_density);
  }

  sol.field = SpinorField(geometry);
  SpinorField& a = sol.field;
  a[{0, 0}] = phi0;
  for (int i = 0; i + 1 < g.nu; ++i) a[{i + 1, 0}] = act(edges.u_edge(i, 0), a[{i, 0}]);
  for (int i = 0; i < g.nu; ++i)
    for (int j = 0; j + 1 < g.nv; ++j) a[{i, j + 1}] = act(edges.v_edge(i, j), a[{i, j}]);

  SpinorField b(geometry);
  b[{0, 0}] = phi0;
  for (int j = 0; j + 1 < g.nv; ++j) b[{0, j + 1}] = act(edges.v_edge(0, j), b[{0, j}]);
  for (int j = 0; j < g.nv; ++j)
    for (int i = 0; i + 1 < g.nu; ++i) b[{i + 1, j}] = act(edges.u_edge(i, j), b[{i, j}]);

  for (std::size_t k = 0; k < a.values.size(); ++k) {
    const double d = (a.values[k] - b.values[k]).norm();
    sol.path_independence = std::max(sol.path_independence, d);
    sol.path_independence_rms += d * d;
  }
  sol.path_independence_rms = std::sqrt(sol.path_independence_rms / a.values.size());
  return sol;
}

GaussCodazziFields gauss_codazzi_check(const std::shared_ptr<const SurfaceGrid>& geometry,
                                       const TensorField& T, std::complex<double> eta,
                                       double brioschi_step) {
  const Grid2& g = geometry->grid();
  const double step = std::min({brioschi_step, g.du(), g.dv()});
  const double four_eta2 = std::real(4.0 * eta * eta);

  TensorField S(geometry);
  for (std::size_t k = 0; k < S.values.size(); ++k) S.values[k] = 2.0 * T.values[k];

  GaussCodazziFields out{ScalarField(geometry), NodeField<TangentVec2>(geometry), 0.0, 0.0};
  g.for_each_interior([&](NodeIndex n) {
    const double r1212 = gauss_curvature(geometry->chart(), g.u(n.i), g.v(n.j), step);
    const double G = r1212 - S[n].det() - four_eta2;
    out.G[n] = G;
    out.sup_G = std::max(out.sup_G, std::abs(G));

    const FramePoint& f = geometry->frame(n);
    const Eigen::Matrix2d s = S[n].matrix();
    std::array<Eigen::Matrix2d, 2> cov;
    for (int a = 0; a < 2; ++a) {
      const double w = f.omega12[a];
      Eigen::Matrix2d gamma;
      gamma << 0.0, -w, w, 0.0;
      cov[a] = frame_derivative(S, a + 1, n).matrix() + gamma * s - s * gamma;
    }
    const Eigen::Vector2d c = cov[0].col(1) - cov[1].col(0);
    out.C[n] = {c(0), c(1)};
    out.sup_C = std::max(out.sup_C, c.norm());
  });
  return out;
}

ResidualReport verify_restricted_equation(const SpinorField& field, const TensorField& T,
                                          std::complex<double> eta) {
  ResidualAccumulator acc;
  field.grid().for_each_interior([&](NodeIndex n) {
    const Spinor& phi = field[n];
    const Spinor bar = conjugate(phi);
    double worst = 0.0;
    for (int a = 0; a < 2; ++a) {
      const TangentVec2 x = a == 0 ? TangentVec2{1.0, 0.0} : TangentVec2{0.0, 1.0};
      const Spinor r = spinor_cov_deriv(field, a + 1, n) + mul2(T[n].apply(x), phi) -
                       (kI * eta) * mul2(x, bar);
      worst = std::max(worst, r.norm());
    }
    acc.add(worst);
  });
  return acc.finish("restricted_killing", field.geometry->chart().name, eta, field.grid().label());
}

}  // namespace spinform
