#pragma once

// Spinor fibers of rank 2 and the fixed Clifford actions used everywhere.
//
// Three-dimensional action:   e_j  ->  -i sigma_j
// Induced surface action:     e_1  ->  i sigma_2,  e_2 -> -i sigma_1
//
// With these matrices the volume element -e1 e2 e3 acts as +1, the surface
// action equals X . e3 . (the identification of the ambient fiber with the
// surface fiber is the identity map), and i*omega = sigma_3, so the
// half-spinor bundles are the coordinate axes.

#include <array>
#include <complex>

#include <Eigen/Core>

namespace spinform {

using cplx = std::complex<double>;
using Op2 = Eigen::Matrix2cd;

inline constexpr cplx kI{0.0, 1.0};

class Spinor {
 public:
  constexpr Spinor() = default;
  constexpr Spinor(cplx z1, cplx z2) : z1_(z1), z2_(z2) {}

  constexpr cplx z1() const { return z1_; }
  constexpr cplx z2() const { return z2_; }

  double norm2() const { return std::norm(z1_) + std::norm(z2_); }
  double norm() const { return std::sqrt(norm2()); }

  /// Positive half (first axis) and negative half (second axis).
  Spinor plus() const { return {z1_, 0.0}; }
  Spinor minus() const { return {0.0, z2_}; }

  Spinor& operator+=(const Spinor& o) {
    z1_ += o.z1_;
    z2_ += o.z2_;
    return *this;
  }
  Spinor& operator-=(const Spinor& o) {
    z1_ -= o.z1_;
    z2_ -= o.z2_;
    return *this;
  }
  Spinor& operator*=(cplx a) {
    z1_ *= a;
    z2_ *= a;
    return *this;
  }

  friend Spinor operator+(Spinor a, const Spinor& b) { return a += b; }
  friend Spinor operator-(Spinor a, const Spinor& b) { return a -= b; }
  friend Spinor operator-(const Spinor& a) { return {-a.z1_, -a.z2_}; }
  friend Spinor operator*(cplx s, Spinor a) { return a *= s; }
  friend Spinor operator*(Spinor a, cplx s) { return a *= s; }
  friend Spinor operator*(double s, Spinor a) { return a *= s; }
  friend bool operator==(const Spinor&, const Spinor&) = default;

  Eigen::Vector2cd vec() const { return {z1_, z2_}; }
  static Spinor from(const Eigen::Vector2cd& v) { return {v(0), v(1)}; }

  /// (Re z1, Im z1, Re z2, Im z2)
  std::array<double, 4> reals() const {
    return {z1_.real(), z1_.imag(), z2_.real(), z2_.imag()};
  }

 private:
  cplx z1_{0.0};
  cplx z2_{0.0};
};

/// Coefficients of a tangent vector in the local orthonormal frame.
struct TangentVec2 {
  double a1 = 0.0;
  double a2 = 0.0;
  double norm2() const { return a1 * a1 + a2 * a2; }
};

struct TangentVec3 {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double norm2() const { return a1 * a1 + a2 * a2 + a3 * a3; }
};

inline Spinor act(const Op2& m, const Spinor& s) { return Spinor::from(m * s.vec()); }

namespace clifford {

const Op2& sigma(int j);  // j = 1, 2, 3

/// Matrix of e_j acting on the three-dimensional fiber, j = 1, 2, 3.
const Op2& frame3(int j);
/// Matrix of e_j acting on the surface fiber, j = 1, 2.
const Op2& frame2(int j);
/// omega = e1 . e2 on the surface fiber (equals -i sigma_3).
const Op2& volume2_matrix();

Op2 matrix2(const TangentVec2& x);
Op2 matrix3(const TangentVec3& x);

}  // namespace clifford

Spinor mul2(const TangentVec2& x, const Spinor& phi);
Spinor mul3(const TangentVec3& x, const Spinor& psi);

/// omega . phi with omega = e1 . e2.
Spinor volume2(const Spinor& phi);

/// phi^+ - phi^-
Spinor conjugate(const Spinor& phi);

/// Hermitian product, conjugate-linear in the second argument.
cplx inner(const Spinor& phi, const Spinor& psi);

inline double re_inner(const Spinor& phi, const Spinor& psi) { return inner(phi, psi).real(); }

}  // namespace spinform
