#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "spinform/clifford.hpp"
#include "spinform/finite_difference.hpp"
#include "spinform/model_space.hpp"

namespace spinform {

struct Rect {
  double u0 = 0.0, u1 = 1.0;
  double v0 = 0.0, v1 = 1.0;

  bool contains(double u, double v, double margin = 0.0) const {
    constexpr double slack = 1e-12;
    return u >= u0 + margin - slack && u <= u1 - margin + slack && v >= v0 + margin - slack &&
           v <= v1 - margin + slack;
  }
};

/// Symmetric 2x2 tensor in the orthonormal frame. Houses T, S = 2T and h.
class SymTensor2 {
 public:
  SymTensor2() = default;
  SymTensor2(double t11, double t12, double t22) : t11_(t11), t12_(t12), t22_(t22) {}

  static SymTensor2 identity() { return {1.0, 0.0, 1.0}; }
  /// Symmetric part of an arbitrary 2x2 matrix.
  static SymTensor2 symmetrize(const Eigen::Matrix2d& m) {
    return {m(0, 0), 0.5 * (m(0, 1) + m(1, 0)), m(1, 1)};
  }

  double t11() const { return t11_; }
  double t12() const { return t12_; }
  double t22() const { return t22_; }
  double operator()(int i, int j) const {
    if (i == 0 && j == 0) return t11_;
    if (i == 1 && j == 1) return t22_;
    return t12_;
  }

  double trace() const { return t11_ + t22_; }
  double det() const { return t11_ * t22_ - t12_ * t12_; }
  Eigen::Matrix2d matrix() const { return (Eigen::Matrix2d() << t11_, t12_, t12_, t22_).finished(); }
  /// T(X) as a tangent vector.
  TangentVec2 apply(const TangentVec2& x) const {
    return {t11_ * x.a1 + t12_ * x.a2, t12_ * x.a1 + t22_ * x.a2};
  }
  double max_abs() const;

  SymTensor2& operator+=(const SymTensor2& o) {
    t11_ += o.t11_;
    t12_ += o.t12_;
    t22_ += o.t22_;
    return *this;
  }
  friend SymTensor2 operator+(SymTensor2 a, const SymTensor2& b) { return a += b; }
  friend SymTensor2 operator-(const SymTensor2& a, const SymTensor2& b) {
    return {a.t11_ - b.t11_, a.t12_ - b.t12_, a.t22_ - b.t22_};
  }
  friend SymTensor2 operator*(double s, const SymTensor2& a) {
    return {s * a.t11_, s * a.t12_, s * a.t22_};
  }

 private:
  double t11_ = 0.0, t12_ = 0.0, t22_ = 0.0;
};

/// Closed-form geometry of a catalog surface, for use as an oracle. The shape
/// operator is expressed in the frame built by frame_at.
struct ClosedForm {
  std::function<SymTensor2(double, double)> shape;
  std::function<double(double, double)> gauss;
};

/// A parametrized surface in one of R3, S3, H3.
struct Chart {
  std::string name;
  ModelSpace space;
  std::function<AmbientVec(double, double)> map;
  Rect domain;
  /// Replaces (e2, nu) by (-e2, -nu), which keeps the frame positively oriented.
  bool flip_normal = false;
  std::optional<ClosedForm> exact;

  /// Evaluates the map and puts the point back on the quadric.
  AmbientVec eval(double u, double v) const { return renormalize(space, map(u, v)); }
};

/// Orthonormal frame, normal, shape operator and connection form at one point.
struct FramePoint {
  double u = 0.0, v = 0.0;
  AmbientVec point, e1, e2, nu;
  SymTensor2 shape;
  double mean_curvature = 0.0;  // tr(shape) / 2
  /// omega12(X) = <nabla_X e1, e2> for X = e1, e2.
  std::array<double, 2> omega12{};
  /// Same connection form evaluated on the coordinate fields d/du, d/dv.
  std::array<double, 2> omega12_coord{};
  /// Row a holds the frame coefficients of the a-th coordinate field.
  Eigen::Matrix2d coord_to_frame = Eigen::Matrix2d::Identity();
  /// Row i holds the coordinate coefficients of e_i.
  Eigen::Matrix2d frame_to_coord = Eigen::Matrix2d::Identity();

  /// Frame coefficients of du d/du + dv d/dv.
  TangentVec2 frame_coeffs(double du, double dv) const {
    return {du * coord_to_frame(0, 0) + dv * coord_to_frame(1, 0),
            du * coord_to_frame(0, 1) + dv * coord_to_frame(1, 1)};
  }
  double omega_along(double du, double dv) const {
    return du * omega12_coord[0] + dv * omega12_coord[1];
  }
};

FramePoint frame_at(const Chart& chart, double u, double v, double step = fd::kStep);

/// Outer stencil step of the Brioschi evaluation.
inline constexpr double kBrioschiStep = 1e-2;

/// Intrinsic curvature R_1212 from the first fundamental form only.
double gauss_curvature(const Chart& chart, double u, double v, double step = kBrioschiStep);

/// Euclidean cofactor vector n with n . w = det[a, b, c, w].
Eigen::Vector4d cofactor_normal(const Eigen::Vector4d& a, const Eigen::Vector4d& b,
                                const Eigen::Vector4d& c);

}  // namespace spinform
