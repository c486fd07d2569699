#include <cmath>

#include <gtest/gtest.h>

#include "pipeline.hpp"
#include "spinform/killing_flow.hpp"

namespace spinform {
namespace {

using testing::distance;
using testing::killing_constant;
using testing::Pipeline;
using testing::run_pipeline;

constexpr double kTol = 1e-6;

std::array<double, 2> centre(const Chart& c) {
  return {0.5 * (c.domain.u0 + c.domain.u1), 0.5 * (c.domain.v0 + c.domain.v1)};
}

TEST(ModifiedConnectionTest, Errors) {
  const Chart c = catalog("plane");
  EXPECT_THROW(ModifiedConnection(c, cplx{0.5, 0.5}, half_shape_source()), std::invalid_argument);
  EXPECT_THROW(ModifiedConnection(c, 0.0, TensorSource{}), std::invalid_argument);
  EXPECT_THROW(ModifiedConnection(c, 0.0, half_shape_source(), 0), std::invalid_argument);
  const ModifiedConnection conn(c, 0.0, half_shape_source());
  const auto seg = ParamCurve::segment({0.0, 0.0}, {0.1, 0.0});
  EXPECT_THROW(propagator(conn, seg, 0), std::invalid_argument);
  EXPECT_THROW(propagator(conn, ParamCurve::segment({0.0, 0.0}, {5.0, 0.0}), 4), std::out_of_range);
}

TEST(ParamCurveTest, Segment) {
  const auto seg = ParamCurve::segment({1.0, 2.0}, {3.0, -2.0});
  const auto mid = seg.position(0.5);
  EXPECT_DOUBLE_EQ(mid[0], 2.0);
  EXPECT_DOUBLE_EQ(mid[1], 0.0);
  const auto vel = seg.velocity(0.3);
  EXPECT_DOUBLE_EQ(vel[0], 2.0);
  EXPECT_DOUBLE_EQ(vel[1], -4.0);
}

TEST(OperatorNormTest, Diagonal) {
  Op2 m = Op2::Zero();
  m(0, 0) = 3.0;
  m(1, 1) = cplx{0.0, -4.0};
  EXPECT_NEAR(operator_norm(m), 4.0, 1e-14);
  EXPECT_NEAR(operator_norm(Op2::Identity()), 1.0, 1e-14);
}

TEST(TransportTest, PlaneIsIdentity) {
  const ModifiedConnection conn(catalog("plane"), 0.0, constant_source({}));
  const auto seg = ParamCurve::segment({-0.5, -0.3}, {0.4, 0.5});
  const Op2 P = propagator(conn, seg, 16);
  EXPECT_EQ(P, Op2::Identity());
}

TEST(TransportProperty, NormPreservedForRealEta) {
  // Any T, including one that is not integrable, gives a unitary transport; RK4
  // itself drifts at fifth order in the step.
  testing::Sampler s;
  for (const std::string name : {"sphere", "clifford_torus", "catenoid"}) {
    const Chart c = catalog(name);
    for (const TensorSource& src : {half_shape_source(), constant_source({0.3, -1.1, 2.0})}) {
      const ModifiedConnection conn(c, killing_constant(name), src);
      const auto [uc, vc] = centre(c);
      const auto seg = ParamCurve::segment({uc - 0.4, vc - 0.5}, {uc + 0.5, vc + 0.3});
      for (int n = 0; n < 5; ++n) {
        const Spinor phi0 = s.spinor();
        EXPECT_NEAR(transport(conn, phi0, seg, 128).norm(), phi0.norm(), 1e-10 * phi0.norm());
      }
      const Spinor phi0 = testing::seed_spinor();
      const double coarse = std::abs(transport(conn, phi0, seg, 8).norm() - 1.0);
      const double fine = std::abs(transport(conn, phi0, seg, 32).norm() - 1.0);
      if (coarse > 1e-12) EXPECT_GT(coarse / fine, std::pow(4.0, 4.5));
    }
  }
}

TEST(TransportProperty, NormLawForImaginaryEta) {
  // d|phi|^2/dt = -Re(X . conj(phi), phi) with X the curve velocity.
  const Chart c = catalog("geodesic_sphere_h3");
  const ModifiedConnection conn(c, cplx{0.0, 0.5}, half_shape_source());
  const auto [uc, vc] = centre(c);
  const std::array<double, 2> a{uc - 0.3, vc - 0.2}, d{0.5, 0.4};
  const Spinor phi0 = testing::seed_spinor();
  const auto len2 = [&](double t) {
    const auto seg = ParamCurve::segment(a, {a[0] + t * d[0], a[1] + t * d[1]});
    return transport(conn, phi0, seg, 200).norm2();
  };
  for (double t : {0.3, 0.6, 0.9}) {
    const auto seg = ParamCurve::segment(a, {a[0] + t * d[0], a[1] + t * d[1]});
    const Spinor phi = transport(conn, phi0, seg, 200);
    const FramePoint f = frame_at(c, a[0] + t * d[0], a[1] + t * d[1]);
    const double rhs = -re_inner(mul2(f.frame_coeffs(d[0], d[1]), conjugate(phi)), phi);
    EXPECT_NEAR(fd::first(len2, t, 1e-3), rhs, 1e-7);
  }
}

TEST(TransportProperty, Linearity) {
  const Chart c = catalog("horosphere");
  const ModifiedConnection conn(c, cplx{0.0, 0.5}, half_shape_source());
  const auto seg = ParamCurve::segment({-0.4, 0.3}, {0.5, -0.2});
  testing::Sampler s;
  for (int n = 0; n < 20; ++n) {
    const Spinor phi = s.spinor(), chi = s.spinor();
    const cplx alpha = s.complex(), beta = s.complex();
    const Spinor lhs = transport(conn, alpha * phi + beta * chi, seg, 8);
    const Spinor rhs = alpha * transport(conn, phi, seg, 8) + beta * transport(conn, chi, seg, 8);
    EXPECT_LT(distance(lhs, rhs), 1e-12 * (1.0 + lhs.norm()));
  }
}

TEST(FlatnessTest, SphereHolonomyShrinksUnderRefinement) {
  const Chart c = catalog("sphere");
  const ModifiedConnection conn(c, 0.0, half_shape_source(), 1);
  double prev = 0.0;
  for (int n : {5, 9, 17}) {
    const Grid2 g(n, n, c.domain);
    const FlatnessReport r = flatness_check(conn, compute_edges(conn, g));
    EXPECT_EQ(r.plaquettes.size(), static_cast<std::size_t>((n - 1) * (n - 1)));
    EXPECT_TRUE(r.flat());
    if (prev > 0.0) EXPECT_LT(r.max_deviation, prev / 8.0);
    prev = r.max_deviation;
  }
}

TEST(EdgesTest, Layout) {
  const Chart c = catalog("plane");
  const ModifiedConnection conn(c, 0.0, half_shape_source());
  const EdgePropagators e = compute_edges(conn, Grid2(6, 5, c.domain));
  EXPECT_EQ(e.u_edges.size(), 5u * 5u);
  EXPECT_EQ(e.v_edges.size(), 6u * 4u);
}

TEST(SolveOnChartTest, CliffordTorusPathIndependence) {
  const Pipeline p = run_pipeline("clifford_torus");
  EXPECT_LT(p.solution.path_independence, 1e-8);
  EXPECT_TRUE(p.solution.flatness.flat());
}

TEST(SolveOnChartTest, SeedAtFirstNode) {
  const Pipeline p = run_pipeline("catenoid", 17, Spinor{1.0, 0.0});
  EXPECT_EQ((p.field()[NodeIndex{0, 0}]), (Spinor{1.0, 0.0}));
}

TEST(SolveOnChartTest, PlaneConstant) {
  const Pipeline p = run_pipeline("plane", 9, Spinor{0.6, cplx{0.0, 0.8}});
  for (const Spinor& phi : p.field().values) EXPECT_EQ(phi, (Spinor{0.6, cplx{0.0, 0.8}}));
  EXPECT_EQ(verify_restricted_equation(p.field(), p.T, 0.0).sup_residual, 0.0);
}

// Non-integrable data must be detected.

double violation_density(const Chart& c, cplx eta, const TensorSource& src) {
  const ModifiedConnection conn(c, eta, src);
  try {
    solve_on_chart(conn, SurfaceGrid::make(c, 33, 33));
  } catch (const FlatnessViolation& e) {
    return e.density();
  }
  return 0.0;
}

TEST(NegativeControl, IdentityTensorOnS3Data) {
  EXPECT_GT(violation_density(catalog("totally_geodesic_s2"), 0.5,
                              constant_source(SymTensor2::identity())),
            1e-3);
  EXPECT_GT(violation_density(catalog("clifford_torus"), 0.5,
                              constant_source(SymTensor2::identity())),
            1e-3);
}

TEST(NegativeControl, WrongKillingConstant) {
  // Clifford torus data with the flat-space constant: Gauss fails by 1.
  EXPECT_GT(violation_density(catalog("clifford_torus"), 0.0, half_shape_source()), 1e-3);
}

TEST(NegativeControl, CodazziFailureAlone) {
  // T = diag(v, 0) on the plane: det(2T) = 0 satisfies Gauss, Codazzi fails.
  const TensorSource src = [](const FramePoint& f) { return SymTensor2{f.v, 0.0, 0.0}; };
  EXPECT_GT(violation_density(catalog("plane"), 0.0, src), 1e-3);
}

TEST(NegativeControl, ToleranceIsRespected) {
  const Chart c = catalog("clifford_torus");
  const ModifiedConnection conn(c, 0.0, half_shape_source());
  const auto geo = SurfaceGrid::make(c, 17, 17);
  // A huge tolerance accepts the data and reports the holonomy instead.
  const ChartSolution sol = solve_on_chart(conn, geo, Spinor{1.0, 0.0}, 1e6);
  EXPECT_FALSE(sol.flatness.flat());
  EXPECT_GT(sol.path_independence, 1e-3);
}

// Gauss-Codazzi fields.

class GaussCodazziSurface : public ::testing::TestWithParam<std::string> {};

TEST_P(GaussCodazziSurface, HalfShapeIsIntegrable) {
  const auto geo = SurfaceGrid::make(catalog(GetParam()), 64, 64);
  const auto gc = gauss_codazzi_check(geo, half_shape_field(geo), killing_constant(GetParam()));
  EXPECT_LT(gc.sup_G, kTol);
  EXPECT_LT(gc.sup_C, kTol);
}

TEST_P(GaussCodazziSurface, RestrictedEquationOnSolution) {
  const Pipeline p = run_pipeline(GetParam());
  EXPECT_LT(verify_restricted_equation(p.field(), p.T, p.eta).sup_residual, 1e-7);
}

INSTANTIATE_TEST_SUITE_P(Catalog, GaussCodazziSurface, ::testing::ValuesIn(catalog_names()));

TEST(GaussCodazziTest, ZeroTensorOnCliffordTorus) {
  // G = R_1212 - det(2T) - 4 eta^2 = 0 - 0 - 1
  const auto geo = SurfaceGrid::make(catalog("clifford_torus"), 17, 17);
  const auto gc = gauss_codazzi_check(geo, TensorField(geo), 0.5);
  geo->grid().for_each_interior([&](NodeIndex n) { EXPECT_NEAR(gc.G[n], -1.0, kTol); });
  EXPECT_NEAR(gc.sup_G, 1.0, kTol);
  EXPECT_LT(gc.sup_C, kTol);
}

TEST(GaussCodazziTest, TotallyGeodesicHyperbolicPlane) {
  const auto geo = SurfaceGrid::make(catalog("totally_geodesic_h2"), 17, 17);
  const auto gc = gauss_codazzi_check(geo, half_shape_field(geo), cplx{0.0, 0.5});
  EXPECT_LT(gc.sup_G, kTol);
}

TEST(RK4Property, FourthOrderInSubsteps) {
  const Chart c = catalog("sphere");
  const auto geo = SurfaceGrid::make(c, 16, 16);
  double res[2];
  for (int k = 0; k < 2; ++k) {
    const ModifiedConnection conn(c, 0.0, half_shape_source(), 1 << k);
    res[k] = solve_on_chart(conn, geo).path_independence;
  }
  EXPECT_NEAR(std::log2(res[0] / res[1]), 4.0, 0.5);
}

}  // namespace
}  // namespace spinform
