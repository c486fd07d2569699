#pragma once

// Spinor fields on surfaces: spin connection, Dirac operator, the Dirac-type
// identities satisfied by restricted Killing spinors, and the energy-momentum
// tensors built from a spinor field.

#include <complex>
#include <utility>

#include "spinform/field.hpp"
#include "spinform/residual.hpp"

namespace spinform {

/// Nodes where |psi^+|^2 or |psi^-|^2 is below this are skipped in ratio-form identities.
inline constexpr double kHalfSpinorFloor = 1e-12;
/// Smallest admissible |phi| for tensors normalized by |phi|^2.
inline constexpr double kVanishingSpinor = 1e-10;

class VanishingSpinor : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// nabla_{e_i} phi = e_i(phi) + 1/2 omega12(e_i) omega . phi, i = 1, 2.
Spinor spinor_cov_deriv(const SpinorField& field, int direction, NodeIndex node);

/// e1 . nabla_{e1} phi + e2 . nabla_{e2} phi
Spinor dirac(const SpinorField& field, NodeIndex node);

SpinorField dirac_field(const SpinorField& field);

SpinorField plus_part(const SpinorField& field);
SpinorField minus_part(const SpinorField& field);

ScalarField mean_curvature_field(const std::shared_ptr<const SurfaceGrid>& geometry);
/// S / 2 at every node.
TensorField half_shape_field(const std::shared_ptr<const SurfaceGrid>& geometry);

/// |D phi - H phi + 2 i eta conj(phi)|
ResidualReport check_dirac_identity(const SpinorField& field, const ScalarField& H,
                                    std::complex<double> eta);

/// max(|D phi^+ - (H + 2 i eta) phi^-|, |D phi^- - (H - 2 i eta) phi^+|)
ResidualReport check_halfspinor_identity(const SpinorField& field, const ScalarField& H,
                                         std::complex<double> eta);

/// phi^+ + i phi^-
SpinorField minimal_eigenspinor(const SpinorField& field);

/// |D phi - lambda phi|
ResidualReport check_eigenspinor(const SpinorField& field, std::complex<double> lambda);

/// Real eta: deviation of |phi|^2 from its mean. Imaginary eta: max over X = e1, e2
/// of |X|phi|^2 - 2 Re(i eta X . conj(phi), phi)|.
ResidualReport check_length_law(const SpinorField& field, std::complex<double> eta);

/// Sup deviation of |phi|^2 from its value at the first interior node.
double length_variation(const SpinorField& field);

/// Energy-momentum tensor. Real eta (including 0):
///   T(X,Y) = 1/2 Re(X . nabla_Y phi + Y . nabla_X phi, phi) / |phi|^2
/// eta = i/2 (any non-real eta):
///   T(X,Y)|phi|^2 = 1/2 Re(...) + 1/2 (|phi^-|^2 - |phi^+|^2) g(X,Y)
TensorField energy_momentum(const SpinorField& field, std::complex<double> eta);

/// T^+(X,Y) = Re(nabla_X psi^+, Y . psi^-), T^-(X,Y) = Re(nabla_X psi^-, Y . psi^+).
/// Matrix entry (a, b) is T(e_a, e_b).
std::pair<MatrixField, MatrixField> tensors_Tpm(const SpinorField& field);

/// T from the Dirac-side tensors: F = T^+ + T^- (plus 1/2 (|psi^+|^2 - |psi^-|^2) g when
/// eta is imaginary) and T = -sym(F) / |psi|^2.
TensorField reconstruct_T_from_dirac(const SpinorField& field, std::complex<double> eta);

/// |tr T^+ + Re(H + 2 i eta)|psi^-|^2| and the same for T^-.
ResidualReport check_tpm_trace(const SpinorField& field, const ScalarField& H,
                               std::complex<double> eta);
/// |T^pm(e1,e2) - T^pm(e2,e1) - 2 Re(eta) |psi^mp|^2|
ResidualReport check_tpm_antisymmetry(const SpinorField& field, std::complex<double> eta);
/// Product form | |psi^+|^2 T^+ - |psi^-|^2 T^- - c |psi^+|^2 |psi^-|^2 g |, c = 2 Im(eta).
/// Keeps every node, so it is defined where the ratio form is not.
ResidualReport check_tpm_balance(const SpinorField& field, std::complex<double> eta);
/// Ratio form T^+/|psi^-|^2 - T^-/|psi^+|^2 - c g with c = 0 (real eta) or 1 (eta = i/2);
/// nodes with a vanishing half spinor are skipped.
ResidualReport check_tpm_ratio(const SpinorField& field, std::complex<double> eta);

/// Sup/L2 of the max-abs entry of a - b over interior nodes.
ResidualReport compare_tensors(const TensorField& a, const TensorField& b, std::string identity);

/// |tr T - H|
ResidualReport check_trace(const TensorField& T, const ScalarField& H);

}  // namespace spinform
