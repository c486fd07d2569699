#include <array>
#include <cmath>
#include <functional>

#include <gtest/gtest.h>

#include "spinform/finite_difference.hpp"
#include "spinform/model_space.hpp"
#include "support.hpp"

namespace spinform {
namespace {

AmbientVec v3(double a, double b, double c) {
  AmbientVec x(3);
  x << a, b, c;
  return x;
}

AmbientVec v4(double a, double b, double c, double d) {
  AmbientVec x(4);
  x << a, b, c, d;
  return x;
}

const ModelSpace kR3 = ModelSpace::of(SpaceKind::R3);
const ModelSpace kS3 = ModelSpace::of(SpaceKind::S3);
const ModelSpace kH3 = ModelSpace::of(SpaceKind::H3);

TEST(ModelSpaceTest, Names) {
  for (SpaceKind k : {SpaceKind::R3, SpaceKind::S3, SpaceKind::H3, SpaceKind::R4}) {
    EXPECT_EQ(space_kind_from_string(to_string(k)), k);
  }
  EXPECT_THROW(space_kind_from_string("S4"), std::invalid_argument);
}

TEST(ModelSpaceTest, KillingConstantAndCurvature) {
  EXPECT_EQ(kR3.eta(), cplx(0.0, 0.0));
  EXPECT_EQ(kS3.eta(), cplx(0.5, 0.0));
  EXPECT_EQ(kH3.eta(), cplx(0.0, 0.5));
  for (const ModelSpace& m : {kR3, kS3, kH3, ModelSpace::of(SpaceKind::R4)}) {
    const cplx e = m.eta();
    EXPECT_DOUBLE_EQ(m.curvature(), (4.0 * e * e).real());
  }
  EXPECT_EQ(kS3.curvature(), 1.0);
  EXPECT_EQ(kH3.curvature(), -1.0);
}

TEST(MetricTest, Examples) {
  EXPECT_EQ(metric(kH3, v4(1, 0, 0, 0), v4(1, 0, 0, 0)), -1.0);
  EXPECT_EQ(metric(kS3, v4(1, 0, 0, 0), v4(0, 1, 0, 0)), 0.0);
  EXPECT_EQ(metric(kR3, v3(1, 2, 2), v3(1, 2, 2)), 9.0);
}

TEST(MetricTest, DimensionMismatch) {
  EXPECT_THROW(metric(kS3, v3(1, 0, 0), v3(1, 0, 0)), std::invalid_argument);
  EXPECT_THROW(metric(kR3, v4(1, 0, 0, 0), v4(1, 0, 0, 0)), std::invalid_argument);
}

TEST(OnSpaceTest, Quadrics) {
  EXPECT_TRUE(on_space(kS3, v4(0.6, 0.8, 0, 0)));
  EXPECT_FALSE(on_space(kS3, v4(1, 1, 0, 0)));
  EXPECT_TRUE(on_space(kH3, v4(std::cosh(0.7), std::sinh(0.7), 0, 0)));
  // lower sheet
  EXPECT_FALSE(on_space(kH3, v4(-1, 0, 0, 0)));
  EXPECT_TRUE(on_space(kR3, v3(5, -3, 2)));
}

TEST(RenormalizeTest, RescalesOntoQuadric) {
  EXPECT_TRUE(on_space(kS3, renormalize(kS3, v4(1, 2, 3, 4))));
  EXPECT_TRUE(on_space(kH3, renormalize(kH3, v4(3, 1, 1, 0))));
  EXPECT_THROW(renormalize(kH3, v4(0, 1, 0, 0)), std::domain_error);
  EXPECT_EQ(renormalize(kR3, v3(1, 2, 3)), v3(1, 2, 3));
}

TEST(TangentProjectTest, Examples) {
  EXPECT_LT((tangent_project(kS3, v4(1, 0, 0, 0), v4(1, 1, 0, 0)) - v4(0, 1, 0, 0)).norm(), 1e-15);
  EXPECT_LT((tangent_project(kH3, v4(1, 0, 0, 0), v4(1, 0, 1, 0)) - v4(0, 0, 1, 0)).norm(), 1e-15);
  EXPECT_EQ(tangent_project(kR3, v3(1, 2, 3), v3(4, 5, 6)), v3(4, 5, 6));
  EXPECT_THROW(tangent_project(kS3, v4(2, 0, 0, 0), v4(0, 1, 0, 0)), std::domain_error);
}

TEST(TangentProjectProperty, Idempotent) {
  testing::Sampler s;
  for (int n = 0; n < 500; ++n) {
    for (const ModelSpace& m : {kS3, kH3}) {
      const AmbientVec p = renormalize(m, v4(2.0 + s.uniform(0, 1), s.uniform(-1, 1),
                                             s.uniform(-1, 1), s.uniform(-1, 1)));
      const AmbientVec w = v4(s.uniform(-2, 2), s.uniform(-2, 2), s.uniform(-2, 2), s.uniform(-2, 2));
      const AmbientVec once = tangent_project(m, p, w);
      const AmbientVec twice = tangent_project(m, p, once);
      EXPECT_LT((once - twice).norm(), 1e-14 * (1.0 + w.norm()) * 10.0);
      EXPECT_LT(std::abs(metric(m, once, p)), 1e-13 * (1.0 + w.norm()));
    }
  }
}

// Samples of a vector field along a curve at t - 2h .. t + 2h.
std::array<AmbientVec, 5> sample(const std::function<AmbientVec(double)>& f, double t, double h) {
  return {f(t - 2 * h), f(t - h), f(t), f(t + h), f(t + 2 * h)};
}

TEST(AmbientCovDerivTest, ConstantFieldInR3) {
  const auto field = [](double) { return v3(1, -2, 0.5); };
  const AmbientVec d = ambient_cov_deriv(kR3, sample(field, 0.3, 1e-3), 1e-3, v3(0, 0, 0));
  EXPECT_EQ(d.norm(), 0.0);
}

TEST(AmbientCovDerivTest, GreatCircleIsGeodesic) {
  const double h = 1e-3;
  const auto velocity = [](double t) { return v4(-std::sin(t), std::cos(t), 0, 0); };
  const double t = 0.4;
  const AmbientVec p = v4(std::cos(t), std::sin(t), 0, 0);
  const AmbientVec d = ambient_cov_deriv(kS3, sample(velocity, t, h), h, p);
  EXPECT_LT(d.norm(), 1e-10);
  EXPECT_LT(std::abs(metric(kS3, d, p)), 1e-10);
}

TEST(AmbientCovDerivTest, RadialComponentRemoved) {
  const double h = 1e-3;
  // Not tangent: the raw derivative has a radial part which must be projected out.
  const auto field = [](double t) { return v4(std::cos(3 * t), t * t, std::sin(t), 1.0); };
  const AmbientVec p = renormalize(kS3, v4(1, 0.2, -0.3, 0.1));
  const AmbientVec d = ambient_cov_deriv(kS3, sample(field, 0.2, h), h, p);
  EXPECT_LT(std::abs(metric(kS3, d, p)), 1e-10);
}

TEST(AmbientCovDerivTest, RejectsBadStep) {
  const auto field = [](double) { return v3(1, 0, 0); };
  EXPECT_THROW(ambient_cov_deriv(kR3, sample(field, 0.0, 1e-3), 0.0, v3(0, 0, 0)),
               std::invalid_argument);
}

// Coordinate surfaces through (1,0,0,0) with orthonormal coordinate fields at the
// origin; the tangent field d/dt is given in closed form.
struct Sheet {
  ModelSpace space;
  std::function<AmbientVec(double, double)> f;
  std::function<AmbientVec(double, double)> ds;
  std::function<AmbientVec(double, double)> dt;
};

Sheet sphere_sheet() {
  return {kS3,
          [](double s, double t) {
            return v4(std::cos(s) * std::cos(t), std::sin(s) * std::cos(t), std::sin(t), 0);
          },
          [](double s, double t) {
            return v4(-std::sin(s) * std::cos(t), std::cos(s) * std::cos(t), 0, 0);
          },
          [](double s, double t) {
            return v4(-std::cos(s) * std::sin(t), -std::sin(s) * std::sin(t), std::cos(t), 0);
          }};
}

Sheet hyperbolic_sheet() {
  return {kH3,
          [](double s, double t) {
            return v4(std::cosh(s) * std::cosh(t), std::sinh(s) * std::cosh(t), std::sinh(t), 0);
          },
          [](double s, double t) {
            return v4(std::sinh(s) * std::cosh(t), std::cosh(s) * std::cosh(t), 0, 0);
          },
          [](double s, double t) {
            return v4(std::cosh(s) * std::sinh(t), std::sinh(s) * std::sinh(t), std::cosh(t), 0);
          }};
}

// <R(ds, dt) dt, ds> at the origin with R(X,Y) = nabla_X nabla_Y - nabla_Y nabla_X.
double sectional_curvature(const Sheet& sh) {
  const double h = 1e-3;
  const ModelSpace& m = sh.space;
  // nabla_t dt at (s, 0) and nabla_s dt at (0, t)
  const auto along_t = [&](double s) {
    return ambient_cov_deriv(m, sample([&](double t) { return sh.dt(s, t); }, 0.0, h), h,
                             sh.f(s, 0.0));
  };
  const auto along_s = [&](double t) {
    return ambient_cov_deriv(m, sample([&](double s) { return sh.dt(s, t); }, 0.0, h), h,
                             sh.f(0.0, t));
  };
  const AmbientVec p = sh.f(0.0, 0.0);
  const AmbientVec st = ambient_cov_deriv(m, sample(along_t, 0.0, h), h, p);
  const AmbientVec ts = ambient_cov_deriv(m, sample(along_s, 0.0, h), h, p);
  const AmbientVec X = sh.ds(0.0, 0.0);
  const AmbientVec Y = sh.dt(0.0, 0.0);
  const double area2 = metric(m, X, X) * metric(m, Y, Y) - std::pow(metric(m, X, Y), 2);
  return metric(m, st - ts, X) / area2;
}

TEST(ModelSpaceProperty, SectionalCurvature) {
  EXPECT_NEAR(sectional_curvature(sphere_sheet()), 1.0, 1e-6);
  EXPECT_NEAR(sectional_curvature(hyperbolic_sheet()), -1.0, 1e-6);
}

TEST(ModelSpaceProperty, MetricCompatibility) {
  const double h = 1e-3;
  for (const Sheet& sh : {sphere_sheet(), hyperbolic_sheet()}) {
    const ModelSpace& m = sh.space;
    const double s0 = 0.3;
    for (double t : {-0.4, 0.0, 0.25, 0.6}) {
      const auto V = [&](double tt) { return sh.ds(s0, tt); };
      const auto W = [&](double tt) { return sh.dt(s0, tt); };
      const double lhs = fd::first([&](double tt) { return metric(m, V(tt), W(tt)); }, t, h);
      const AmbientVec p = sh.f(s0, t);
      const AmbientVec dV = ambient_cov_deriv(m, sample(V, t, h), h, p);
      const AmbientVec dW = ambient_cov_deriv(m, sample(W, t, h), h, p);
      EXPECT_NEAR(lhs, metric(m, dV, W(t)) + metric(m, V(t), dW), 1e-9);
    }
  }
}

}  // namespace
}  // namespace spinform
