#include "spinform/clifford.hpp"

#include <stdexcept>

namespace spinform::clifford {

namespace {

struct Tables {
  std::array<Op2, 3> pauli;
  std::array<Op2, 3> e3;
  std::array<Op2, 2> e2;
  Op2 omega;

  Tables() {
    pauli[0] << 0.0, 1.0, 1.0, 0.0;
    pauli[1] << 0.0, -kI, kI, 0.0;
    pauli[2] << 1.0, 0.0, 0.0, -1.0;
    for (int j = 0; j < 3; ++j) e3[j] = -kI * pauli[j];
    // e_j . nu . on the ambient fiber, nu = e_3
    e2[0] = e3[0] * e3[2];
    e2[1] = e3[1] * e3[2];
    omega = e2[0] * e2[1];
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

const Op2& sigma(int j) {
  if (j < 1 || j > 3) throw std::out_of_range("sigma index must be 1..3");
  return tables().pauli[j - 1];
}

const Op2& frame3(int j) {
  if (j < 1 || j > 3) throw std::out_of_range("frame index must be 1..3");
  return tables().e3[j - 1];
}

const Op2& frame2(int j) {
  if (j < 1 || j > 2) throw std::out_of_range("frame index must be 1..2");
  return tables().e2[j - 1];
}

const Op2& volume2_matrix() { return tables().omega; }

Op2 matrix2(const TangentVec2& x) {
  const auto& t = tables();
  return x.a1 * t.e2[0] + x.a2 * t.e2[1];
}

Op2 matrix3(const TangentVec3& x) {
  const auto& t = tables();
  return x.a1 * t.e3[0] + x.a2 * t.e3[1] + x.a3 * t.e3[2];
}

}  // namespace spinform::clifford

namespace spinform {

Spinor mul2(const TangentVec2& x, const Spinor& phi) {
  // (a1 i sigma_2 + a2 (-i sigma_1)) phi written out
  const cplx z1 = phi.z1();
  const cplx z2 = phi.z2();
  return {x.a1 * z2 - kI * x.a2 * z2, -x.a1 * z1 - kI * x.a2 * z1};
}

Spinor mul3(const TangentVec3& x, const Spinor& psi) { return act(clifford::matrix3(x), psi); }

Spinor volume2(const Spinor& phi) { return {-kI * phi.z1(), kI * phi.z2()}; }

Spinor conjugate(const Spinor& phi) { return {phi.z1(), -phi.z2()}; }

cplx inner(const Spinor& phi, const Spinor& psi) {
  return phi.z1() * std::conj(psi.z1()) + phi.z2() * std::conj(psi.z2());
}

}  // namespace spinform
