#include <map>

#include <gtest/gtest.h>

#include "pipeline.hpp"
#include "spinform/spin_calculus.hpp"

namespace spinform {
namespace {

using testing::distance;
using testing::Pipeline;
using testing::run_pipeline;
using testing::surface_oracle;

constexpr double kTol = 1e-6;
constexpr double kStrict = 1e-8;

const Pipeline& cached(const std::string& name) {
  static std::map<std::string, Pipeline> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, run_pipeline(name)).first;
  return it->second;
}

SpinorField constant_field(const std::shared_ptr<const SurfaceGrid>& geo, Spinor phi) {
  return SpinorField(geo, phi);
}

// ---------------------------------------------------------------------------
// Flat examples

TEST(SpinorCovDerivTest, ConstantFieldOnPlane) {
  const auto geo = SurfaceGrid::make(catalog("plane"), 9, 9);
  const SpinorField f = constant_field(geo, {cplx{1, 2}, cplx{-0.5, 0.3}});
  geo->grid().for_each_interior([&](NodeIndex n) {
    EXPECT_EQ(spinor_cov_deriv(f, 1, n).norm(), 0.0);
    EXPECT_EQ(spinor_cov_deriv(f, 2, n).norm(), 0.0);
    EXPECT_EQ(dirac(f, n).norm(), 0.0);
  });
}

TEST(SpinorCovDerivTest, CliffordImageOfConstantOnPlane) {
  const auto geo = SurfaceGrid::make(catalog("plane"), 9, 9);
  const SpinorField f = constant_field(geo, mul2({1, 0}, Spinor{1.0, kI}));
  geo->grid().for_each_interior(
      [&](NodeIndex n) { EXPECT_EQ(spinor_cov_deriv(f, 1, n).norm(), 0.0); });
}

TEST(SpinorCovDerivTest, Errors) {
  const auto geo = SurfaceGrid::make(catalog("plane"), 9, 9);
  const SpinorField f = constant_field(geo, {1.0, 0.0});
  EXPECT_THROW(spinor_cov_deriv(f, 3, {4, 4}), std::out_of_range);
  EXPECT_THROW(spinor_cov_deriv(f, 0, {4, 4}), std::out_of_range);
  EXPECT_THROW(spinor_cov_deriv(f, 1, {0, 4}), std::out_of_range);
}

TEST(SpinorCovDerivProperty, Linearity) {
  const auto geo = SurfaceGrid::make(catalog("catenoid"), 17, 17);
  testing::Sampler s;
  SpinorField a(geo), b(geo), c(geo);
  const cplx alpha{0.7, -1.2}, beta{-0.4, 0.9};
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    a.values[k] = s.spinor();
    b.values[k] = s.spinor();
    c.values[k] = alpha * a.values[k] + beta * b.values[k];
  }
  geo->grid().for_each_interior([&](NodeIndex n) {
    for (int i = 1; i <= 2; ++i) {
      const Spinor lhs = spinor_cov_deriv(c, i, n);
      const Spinor rhs = alpha * spinor_cov_deriv(a, i, n) + beta * spinor_cov_deriv(b, i, n);
      EXPECT_LT(distance(lhs, rhs), 1e-12 * (1.0 + lhs.norm()));
    }
  });
}

TEST(HalfSpinorTest, PlaneConstant) {
  const auto geo = SurfaceGrid::make(catalog("plane"), 9, 9);
  const SpinorField f = constant_field(geo, {0.6, 0.8});
  const ScalarField H = mean_curvature_field(geo);
  EXPECT_EQ(check_halfspinor_identity(f, H, 0.0).sup_residual, 0.0);
  EXPECT_EQ(check_dirac_identity(f, H, 0.0).sup_residual, 0.0);
  EXPECT_EQ(check_length_law(f, 0.0).sup_residual, 0.0);
  EXPECT_EQ(length_variation(f), 0.0);
}

TEST(SplitTest, PlusMinusParts) {
  const auto geo = SurfaceGrid::make(catalog("plane"), 5, 5);
  const SpinorField f = constant_field(geo, {cplx{1, 1}, cplx{2, -1}});
  const SpinorField p = plus_part(f), m = minus_part(f);
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    EXPECT_EQ(p.values[k] + m.values[k], f.values[k]);
    EXPECT_EQ(p.values[k].z2(), cplx{});
  }
  const SpinorField e = minimal_eigenspinor(f);
  EXPECT_EQ(e.values[0], (Spinor{cplx{1, 1}, kI * cplx{2, -1}}));
}

TEST(EtaTest, MixedKillingConstantRejected) {
  const auto geo = SurfaceGrid::make(catalog("plane"), 5, 5);
  const SpinorField f = constant_field(geo, {1.0, 0.0});
  const ScalarField H = mean_curvature_field(geo);
  EXPECT_THROW(check_dirac_identity(f, H, cplx{0.5, 0.5}), std::invalid_argument);
  EXPECT_THROW(energy_momentum(f, cplx{0.5, 0.5}), std::invalid_argument);
  EXPECT_THROW(check_tpm_balance(f, cplx{0.5, 0.5}), std::invalid_argument);
}

TEST(VanishingSpinorTest, NormalizedTensorsRefuseZero) {
  const auto geo = SurfaceGrid::make(catalog("plane"), 7, 7);
  const SpinorField zero = constant_field(geo, {});
  EXPECT_THROW(energy_momentum(zero, 0.0), VanishingSpinor);
  EXPECT_THROW(reconstruct_T_from_dirac(zero, 0.0), VanishingSpinor);
}

TEST(HalfSpinorFloorTest, RatioSkipsVanishingHalves) {
  // A positive-chirality constant on the plane: psi^- vanishes everywhere, so the
  // ratio form has nothing to compare while the product form is exactly zero.
  const auto geo = SurfaceGrid::make(catalog("plane"), 9, 9);
  const SpinorField f = constant_field(geo, {1.0, 0.0});
  const ResidualReport ratio = check_tpm_ratio(f, 0.0);
  EXPECT_EQ(ratio.nodes, 0u);
  EXPECT_EQ(check_tpm_balance(f, 0.0).sup_residual, 0.0);
}

// ---------------------------------------------------------------------------
// Restriction pipelines

TEST(PipelineTest, SphereGaussFormula) {
  const Pipeline& p = cached("sphere");
  EXPECT_LT(verify_restricted_equation(p.field(), p.T, p.eta).sup_residual, kTol);
  // Explicitly: nabla_{e_i} phi + 1/2 S(e_i) . phi with S = Id.
  double worst = 0.0;
  p.geometry->grid().for_each_interior([&](NodeIndex n) {
    const Spinor phi = p.field()[n];
    worst = std::max(worst, (spinor_cov_deriv(p.field(), 1, n) + 0.5 * mul2({1, 0}, phi)).norm());
    worst = std::max(worst, (spinor_cov_deriv(p.field(), 2, n) + 0.5 * mul2({0, 1}, phi)).norm());
  });
  EXPECT_LT(worst, kTol);
}

TEST(PipelineTest, DiracOnSphereIsMeanCurvature) {
  const Pipeline& p = cached("sphere");
  double worst = 0.0;
  p.geometry->grid().for_each_interior([&](NodeIndex n) {
    worst = std::max(worst, distance(dirac(p.field(), n), p.field()[n]));
  });
  EXPECT_LT(worst, kTol);
}

TEST(PipelineTest, DiracOnCatenoidVanishes) {
  const Pipeline& p = cached("catenoid");
  double worst = 0.0;
  p.geometry->grid().for_each_interior(
      [&](NodeIndex n) { worst = std::max(worst, dirac(p.field(), n).norm()); });
  EXPECT_LT(worst, kTol);
}

class PipelineSurface : public ::testing::TestWithParam<std::string> {};

TEST_P(PipelineSurface, DiracIdentity) {
  const Pipeline& p = cached(GetParam());
  EXPECT_LT(check_dirac_identity(p.field(), p.H, p.eta).sup_residual, kTol);
  EXPECT_LT(check_halfspinor_identity(p.field(), p.H, p.eta).sup_residual, kTol);
}

TEST_P(PipelineSurface, LengthLaw) {
  const Pipeline& p = cached(GetParam());
  const ResidualReport r = check_length_law(p.field(), p.eta);
  EXPECT_LT(r.sup_residual, p.eta.imag() != 0.0 ? kTol : kStrict);
}

TEST_P(PipelineSurface, EnergyMomentumIsHalfShape) {
  const Pipeline& p = cached(GetParam());
  const TensorField em = energy_momentum(p.field(), p.eta);
  EXPECT_LT(compare_tensors(em, p.T, "em").sup_residual, kTol);
  EXPECT_LT(check_trace(em, p.H).sup_residual, kTol);
  const TensorField rec = reconstruct_T_from_dirac(p.field(), p.eta);
  EXPECT_LT(compare_tensors(rec, em, "rec").sup_residual, kStrict);
  // Independent oracle: T = diag(k_u, k_v) / 2 in the coordinate-aligned frame.
  double worst = 0.0;
  p.geometry->grid().for_each_interior([&](NodeIndex n) {
    const auto o = surface_oracle(GetParam(), p.geometry->frame(n).u);
    const SymTensor2 expected{0.5 * o.k_u, 0.0, 0.5 * o.k_v};
    worst = std::max(worst, (em[n] - expected).max_abs());
  });
  EXPECT_LT(worst, kTol);
}

TEST_P(PipelineSurface, TpmTraceAndAntisymmetry) {
  const Pipeline& p = cached(GetParam());
  EXPECT_LT(check_tpm_trace(p.field(), p.H, p.eta).sup_residual, kTol);
  EXPECT_LT(check_tpm_antisymmetry(p.field(), p.eta).sup_residual, kTol);
  EXPECT_LT(check_tpm_ratio(p.field(), p.eta).sup_residual, kTol);
  EXPECT_LT(check_tpm_balance(p.field(), p.eta).sup_residual, kTol);
}

INSTANTIATE_TEST_SUITE_P(Catalog, PipelineSurface, ::testing::ValuesIn(catalog_names()));

TEST(PipelineTest, TpmBalanceOnNonMinimalS3Surface) {
  const Pipeline& p = cached("geodesic_sphere_s3");
  double hmin = 1e9;
  p.geometry->grid().for_each_interior([&](NodeIndex n) { hmin = std::min(hmin, std::abs(p.H[n])); });
  ASSERT_GT(hmin, 0.1);
  EXPECT_LT(check_tpm_balance(p.field(), p.eta).sup_residual, kTol);
}

TEST(PipelineTest, TpmAntisymmetryExplicit) {
  // T^pm(e1, e2) = |psi^mp|^2 + T^pm(e2, e1) for eta = 1/2.
  const Pipeline& p = cached("clifford_torus");
  const auto [Tp, Tm] = tensors_Tpm(p.field());
  double worst = 0.0;
  p.geometry->grid().for_each_interior([&](NodeIndex n) {
    const Spinor phi = p.field()[n];
    worst = std::max(worst, std::abs(Tp[n](0, 1) - phi.minus().norm2() - Tp[n](1, 0)));
    worst = std::max(worst, std::abs(Tm[n](0, 1) - phi.plus().norm2() - Tm[n](1, 0)));
  });
  EXPECT_LT(worst, kTol);
}

TEST(PipelineTest, TpmBalanceImaginaryExplicit) {
  const Pipeline& p = cached("horosphere");
  const auto [Tp, Tm] = tensors_Tpm(p.field());
  double worst = 0.0;
  p.geometry->grid().for_each_interior([&](NodeIndex n) {
    const double a = p.field()[n].plus().norm2(), b = p.field()[n].minus().norm2();
    const Eigen::Matrix2d lhs = a * Tp[n] - b * Tm[n];
    worst = std::max(worst, (lhs - a * b * Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff());
  });
  EXPECT_LT(worst, kTol);
}

TEST(MinimalEigenspinorTest, TotallyGeodesicSphere) {
  const Pipeline& p = cached("totally_geodesic_s2");
  const SpinorField star = minimal_eigenspinor(p.field());
  EXPECT_LT(check_eigenspinor(star, 1.0).sup_residual, kTol);
  EXPECT_LT(length_variation(star), kStrict);
}

TEST(MinimalEigenspinorTest, Catenoid) {
  const Pipeline& p = cached("catenoid");
  EXPECT_LT(check_eigenspinor(minimal_eigenspinor(p.field()), 0.0).sup_residual, kTol);
}

TEST(HalfSpinorTest, TotallyGeodesicExplicit) {
  // D phi^pm = pm i phi^mp for H = 0, eta = 1/2.
  const Pipeline& p = cached("totally_geodesic_s2");
  const SpinorField plus = plus_part(p.field()), minus = minus_part(p.field());
  double worst = 0.0;
  p.geometry->grid().for_each_interior([&](NodeIndex n) {
    worst = std::max(worst, distance(dirac(plus, n), kI * minus[n]));
    worst = std::max(worst, distance(dirac(minus, n), -kI * plus[n]));
  });
  EXPECT_LT(worst, kTol);
}

TEST(HalfSpinorTest, SphereExplicit) {
  const Pipeline& p = cached("sphere");
  const SpinorField plus = plus_part(p.field()), minus = minus_part(p.field());
  double worst = 0.0;
  p.geometry->grid().for_each_interior([&](NodeIndex n) {
    worst = std::max(worst, distance(dirac(plus, n), minus[n]));
    worst = std::max(worst, distance(dirac(minus, n), plus[n]));
  });
  EXPECT_LT(worst, kTol);
}

TEST(LengthLawTest, HyperbolicExplicit) {
  // X|phi|^2 + Re(X . conj(phi), phi) = 0 for eta = i/2.
  const Pipeline& p = cached("geodesic_sphere_h3");
  ScalarField len(p.geometry);
  for (std::size_t k = 0; k < len.values.size(); ++k) len.values[k] = p.field().values[k].norm2();
  double worst = 0.0;
  p.geometry->grid().for_each_interior([&](NodeIndex n) {
    const Spinor phi = p.field()[n];
    worst = std::max(worst, std::abs(frame_derivative(len, 1, n) +
                                     re_inner(mul2({1, 0}, conjugate(phi)), phi)));
    worst = std::max(worst, std::abs(frame_derivative(len, 2, n) +
                                     re_inner(mul2({0, 1}, conjugate(phi)), phi)));
  });
  EXPECT_LT(worst, kTol);
}

TEST(ConvergenceProperty, RefinementReducesResidual) {
  const Pipeline coarse = run_pipeline("sphere", 16);
  const Pipeline fine = run_pipeline("sphere", 32);
  const double a = verify_restricted_equation(coarse.field(), coarse.T, coarse.eta).sup_residual;
  const double b = verify_restricted_equation(fine.field(), fine.T, fine.eta).sup_residual;
  EXPECT_GT(a / b, 3.5);
}

}  // namespace
}  // namespace spinform
