#include "spinform/spin_calculus.hpp"

#include <cmath>
#include <sstream>

namespace spinform {

namespace {

constexpr TangentVec2 kE1{1.0, 0.0};
constexpr TangentVec2 kE2{0.0, 1.0};

const TangentVec2& unit(int a) { return a == 0 ? kE1 : kE2; }

void require_admissible_eta(std::complex<double> eta) {
  if (eta.real() != 0.0 && eta.imag() != 0.0) {
    throw std::invalid_argument("Killing constant must be real or purely imaginary");
  }
}

bool is_imaginary(std::complex<double> eta) { return eta.imag() != 0.0; }

std::string surface_of(const SpinorField& f) { return f.geometry->chart().name; }
std::string grid_of(const SpinorField& f) { return f.grid().label(); }

double max_abs(const Eigen::Matrix2d& m) { return m.cwiseAbs().maxCoeff(); }

struct Nabla {
  Spinor d1, d2;
  const Spinor& operator[](int a) const { return a == 0 ? d1 : d2; }
};

Nabla nabla(const SpinorField& f, NodeIndex n) {
  return {spinor_cov_deriv(f, 1, n), spinor_cov_deriv(f, 2, n)};
}

}  // namespace

std::string format_eta(std::complex<double> eta) {
  std::ostringstream os;
  os.precision(12);
  if (eta.imag() == 0.0) {
    os << eta.real();
  } else if (eta.real() == 0.0) {
    os << eta.imag() << "i";
  } else {
    os << eta.real() << (eta.imag() < 0 ? "" : "+") << eta.imag() << "i";
  }
  return os.str();
}

Spinor spinor_cov_deriv(const SpinorField& field, int direction, NodeIndex node) {
  if (direction != 1 && direction != 2) throw std::out_of_range("direction must be 1 or 2");
  const Spinor d = frame_derivative(field, direction, node);
  const double w = field.geometry->frame(node).omega12[direction - 1];
  return d + (0.5 * w) * volume2(field[node]);
}

Spinor dirac(const SpinorField& field, NodeIndex node) {
  return mul2(kE1, spinor_cov_deriv(field, 1, node)) + mul2(kE2, spinor_cov_deriv(field, 2, node));
}

SpinorField dirac_field(const SpinorField& field) {
  SpinorField out(field.geometry);
  field.grid().for_each_interior([&](NodeIndex n) { out[n] = dirac(field, n); });
  return out;
}

SpinorField plus_part(const SpinorField& field) {
  SpinorField out(field.geometry);
  for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] = field.values[k].plus();
  return out;
}

SpinorField minus_part(const SpinorField& field) {
  SpinorField out(field.geometry);
  for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] = field.values[k].minus();
  return out;
}

ScalarField mean_curvature_field(const std::shared_ptr<const SurfaceGrid>& geometry) {
  ScalarField H(geometry);
  const Grid2& g = geometry->grid();
  for (int j = 0; j < g.nv; ++j)
    for (int i = 0; i < g.nu; ++i) H[{i, j}] = geometry->frame({i, j}).mean_curvature;
  return H;
}

TensorField half_shape_field(const std::shared_ptr<const SurfaceGrid>& geometry) {
  TensorField T(geometry);
  const Grid2& g = geometry->grid();
  for (int j = 0; j < g.nv; ++j)
    for (int i = 0; i < g.nu; ++i) T[{i, j}] = 0.5 * geometry->frame({i, j}).shape;
  return T;
}

ResidualReport check_dirac_identity(const SpinorField& field, const ScalarField& H,
                                    std::complex<double> eta) {
  require_admissible_eta(eta);
  ResidualAccumulator acc;
  field.grid().for_each_interior([&](NodeIndex n) {
    const Spinor& phi = field[n];
    const Spinor r = dirac(field, n) - H[n] * phi + (2.0 * kI * eta) * conjugate(phi);
    acc.add(r.norm());
  });
  return acc.finish("dirac_identity", surface_of(field), eta, grid_of(field));
}

ResidualReport check_halfspinor_identity(const SpinorField& field, const ScalarField& H,
                                         std::complex<double> eta) {
  require_admissible_eta(eta);
  const SpinorField plus = plus_part(field);
  const SpinorField minus = minus_part(field);
  ResidualAccumulator acc;
  field.grid().for_each_interior([&](NodeIndex n) {
    const Spinor rp = dirac(plus, n) - (H[n] + 2.0 * kI * eta) * minus[n];
    const Spinor rm = dirac(minus, n) - (H[n] - 2.0 * kI * eta) * plus[n];
    acc.add(std::max(rp.norm(), rm.norm()));
  });
  return acc.finish("half_spinor_dirac", surface_of(field), eta, grid_of(field));
}

SpinorField minimal_eigenspinor(const SpinorField& field) {
  SpinorField out(field.geometry);
  for (std::size_t k = 0; k < out.values.size(); ++k) {
    const Spinor& p = field.values[k];
    out.values[k] = p.plus() + kI * p.minus();
  }
  return out;
}

ResidualReport check_eigenspinor(const SpinorField& field, std::complex<double> lambda) {
  ResidualAccumulator acc;
  field.grid().for_each_interior(
      [&](NodeIndex n) { acc.add((dirac(field, n) - lambda * field[n]).norm()); });
  return acc.finish("eigenspinor", surface_of(field), lambda / 2.0, grid_of(field));
}

double length_variation(const SpinorField& field) {
  const Grid2& g = field.grid();
  const double ref = field[{kStencilMargin, kStencilMargin}].norm2();
  double worst = 0.0;
  g.for_each_interior([&](NodeIndex n) { worst = std::max(worst, std::abs(field[n].norm2() - ref)); });
  return worst;
}

ResidualReport check_length_law(const SpinorField& field, std::complex<double> eta) {
  require_admissible_eta(eta);
  ResidualAccumulator acc;
  if (!is_imaginary(eta)) {
    double mean = 0.0;
    std::size_t count = 0;
    field.grid().for_each_interior([&](NodeIndex n) {
      mean += field[n].norm2();
      ++count;
    });
    mean /= static_cast<double>(count);
    field.grid().for_each_interior([&](NodeIndex n) { acc.add(std::abs(field[n].norm2() - mean)); });
  } else {
    ScalarField len2(field.geometry);
    for (std::size_t k = 0; k < len2.values.size(); ++k) len2.values[k] = field.values[k].norm2();
    field.grid().for_each_interior([&](NodeIndex n) {
      const Spinor bar = conjugate(field[n]);
      double worst = 0.0;
      for (int a = 0; a < 2; ++a) {
        const double lhs = frame_derivative(len2, a + 1, n);
        const double rhs = 2.0 * re_inner(kI * eta * mul2(unit(a), bar), field[n]);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
      acc.add(worst);
    });
  }
  return acc.finish("length_law", surface_of(field), eta, grid_of(field));
}

TensorField energy_momentum(const SpinorField& field, std::complex<double> eta) {
  require_admissible_eta(eta);
  TensorField T(field.geometry);
  field.grid().for_each_interior([&](NodeIndex n) {
    const Spinor& phi = field[n];
    const double len2 = phi.norm2();
    if (std::sqrt(len2) <= kVanishingSpinor) throw VanishingSpinor("energy_momentum: spinor vanishes");
    const Nabla d = nabla(field, n);
    Eigen::Matrix2d m;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        m(a, b) = 0.5 * re_inner(mul2(unit(a), d[b]) + mul2(unit(b), d[a]), phi);
    if (is_imaginary(eta)) {
      const double c = 0.5 * (phi.minus().norm2() - phi.plus().norm2());
      m += c * Eigen::Matrix2d::Identity();
    }
    T[n] = SymTensor2::symmetrize(m / len2);
  });
  return T;
}

std::pair<MatrixField, MatrixField> tensors_Tpm(const SpinorField& field) {
  MatrixField tp(field.geometry, Eigen::Matrix2d::Zero());
  MatrixField tm(field.geometry, Eigen::Matrix2d::Zero());
  field.grid().for_each_interior([&](NodeIndex n) {
    const Spinor& psi = field[n];
    const Nabla d = nabla(field, n);
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        tp[n](a, b) = re_inner(d[a].plus(), mul2(unit(b), psi.minus()));
        tm[n](a, b) = re_inner(d[a].minus(), mul2(unit(b), psi.plus()));
      }
    }
  });
  return {std::move(tp), std::move(tm)};
}

TensorField reconstruct_T_from_dirac(const SpinorField& field, std::complex<double> eta) {
  require_admissible_eta(eta);
  const auto [tp, tm] = tensors_Tpm(field);
  TensorField T(field.geometry);
  field.grid().for_each_interior([&](NodeIndex n) {
    const Spinor& psi = field[n];
    const double len2 = psi.norm2();
    if (std::sqrt(len2) <= kVanishingSpinor) {
      throw VanishingSpinor("reconstruct_T_from_dirac: spinor vanishes");
    }
    Eigen::Matrix2d F = tp[n] + tm[n];
    if (is_imaginary(eta)) {
      F += 0.5 * (psi.plus().norm2() - psi.minus().norm2()) * Eigen::Matrix2d::Identity();
    }
    T[n] = SymTensor2::symmetrize(-F / len2);
  });
  return T;
}

ResidualReport check_tpm_trace(const SpinorField& field, const ScalarField& H,
                               std::complex<double> eta) {
  require_admissible_eta(eta);
  const auto [tp, tm] = tensors_Tpm(field);
  ResidualAccumulator acc;
  field.grid().for_each_interior([&](NodeIndex n) {
    const double cp = std::real(H[n] + 2.0 * kI * eta);
    const double cm = std::real(H[n] - 2.0 * kI * eta);
    const double rp = tp[n].trace() + cp * field[n].minus().norm2();
    const double rm = tm[n].trace() + cm * field[n].plus().norm2();
    acc.add(std::max(std::abs(rp), std::abs(rm)));
  });
  return acc.finish("tpm_trace", surface_of(field), eta, grid_of(field));
}

ResidualReport check_tpm_antisymmetry(const SpinorField& field, std::complex<double> eta) {
  require_admissible_eta(eta);
  const auto [tp, tm] = tensors_Tpm(field);
  ResidualAccumulator acc;
  field.grid().for_each_interior([&](NodeIndex n) {
    const double k = 2.0 * eta.real();
    const double rp = tp[n](0, 1) - tp[n](1, 0) - k * field[n].minus().norm2();
    const double rm = tm[n](0, 1) - tm[n](1, 0) - k * field[n].plus().norm2();
    acc.add(std::max(std::abs(rp), std::abs(rm)));
  });
  return acc.finish("tpm_antisymmetry", surface_of(field), eta, grid_of(field));
}

ResidualReport check_tpm_balance(const SpinorField& field, std::complex<double> eta) {
  require_admissible_eta(eta);
  const auto [tp, tm] = tensors_Tpm(field);
  const double c = 2.0 * eta.imag();
  ResidualAccumulator acc;
  field.grid().for_each_interior([&](NodeIndex n) {
    const double p2 = field[n].plus().norm2();
    const double m2 = field[n].minus().norm2();
    acc.add(max_abs(p2 * tp[n] - m2 * tm[n] - c * p2 * m2 * Eigen::Matrix2d::Identity()));
  });
  return acc.finish("tpm_balance", surface_of(field), eta, grid_of(field));
}

ResidualReport check_tpm_ratio(const SpinorField& field, std::complex<double> eta) {
  require_admissible_eta(eta);
  const auto [tp, tm] = tensors_Tpm(field);
  const double c = 2.0 * eta.imag();
  ResidualAccumulator acc;
  field.grid().for_each_interior([&](NodeIndex n) {
    const double p2 = field[n].plus().norm2();
    const double m2 = field[n].minus().norm2();
    if (p2 < kHalfSpinorFloor || m2 < kHalfSpinorFloor) return;
    acc.add(max_abs(tp[n] / m2 - tm[n] / p2 - c * Eigen::Matrix2d::Identity()));
  });
  return acc.finish("tpm_ratio", surface_of(field), eta, grid_of(field));
}

ResidualReport compare_tensors(const TensorField& a, const TensorField& b, std::string identity) {
  ResidualAccumulator acc;
  a.grid().for_each_interior([&](NodeIndex n) { acc.add((a[n] - b[n]).max_abs()); });
  return acc.finish(std::move(identity), a.geometry->chart().name, 0.0, a.grid().label());
}

ResidualReport check_trace(const TensorField& T, const ScalarField& H) {
  ResidualAccumulator acc;
  T.grid().for_each_interior([&](NodeIndex n) { acc.add(std::abs(T[n].trace() - H[n])); });
  return acc.finish("trace_T_equals_H", T.geometry->chart().name, 0.0, T.grid().label());
}

}  // namespace spinform
