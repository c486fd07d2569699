#pragma once

// Oriented three-dimensional hypersurfaces of R^4.
//
// The spinor bundle of the hypersurface is the rank-2 fiber with the
// three-dimensional Clifford action; the restricted parallel spinor equation is
//
//   nabla_X phi + T(X) . phi = 0,
//
// integrable iff T is Codazzi and R_ijkl + 4 T_il T_jk - 4 T_ik T_jl = 0.

#include <array>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "spinform/clifford.hpp"
#include "spinform/finite_difference.hpp"
#include "spinform/killing_flow.hpp"
#include "spinform/residual.hpp"

namespace spinform {

struct Box3 {
  double u0 = 0.0, u1 = 1.0;
  double v0 = 0.0, v1 = 1.0;
  double w0 = 0.0, w1 = 1.0;

  bool contains(double u, double v, double w, double margin = 0.0) const {
    constexpr double slack = 1e-12;
    return u >= u0 + margin - slack && u <= u1 - margin + slack && v >= v0 + margin - slack &&
           v <= v1 - margin + slack && w >= w0 + margin - slack && w <= w1 - margin + slack;
  }
};

/// Symmetric 3x3 tensor in the orthonormal frame.
class SymTensor3 {
 public:
  SymTensor3() : m_(Eigen::Matrix3d::Zero()) {}
  static SymTensor3 identity() { return symmetrize(Eigen::Matrix3d::Identity()); }
  static SymTensor3 diagonal(double a, double b, double c) {
    return symmetrize(Eigen::Vector3d(a, b, c).asDiagonal());
  }
  static SymTensor3 symmetrize(const Eigen::Matrix3d& m) {
    SymTensor3 t;
    t.m_ = 0.5 * (m + m.transpose());
    return t;
  }

  double operator()(int i, int j) const { return m_(i, j); }
  const Eigen::Matrix3d& matrix() const { return m_; }
  double trace() const { return m_.trace(); }
  double max_abs() const { return m_.cwiseAbs().maxCoeff(); }
  TangentVec3 apply(const TangentVec3& x) const {
    const Eigen::Vector3d y = m_ * Eigen::Vector3d(x.a1, x.a2, x.a3);
    return {y(0), y(1), y(2)};
  }

  SymTensor3& operator+=(const SymTensor3& o) {
    m_ += o.m_;
    return *this;
  }
  friend SymTensor3 operator+(const SymTensor3& a, const SymTensor3& b) {
    return symmetrize(a.m_ + b.m_);
  }
  friend SymTensor3 operator-(const SymTensor3& a, const SymTensor3& b) {
    return symmetrize(a.m_ - b.m_);
  }
  friend SymTensor3 operator*(double s, const SymTensor3& a) { return symmetrize(s * a.m_); }

 private:
  Eigen::Matrix3d m_;
};

/// A parametrized hypersurface of R^4.
struct Chart3 {
  std::string name;
  std::function<Eigen::Vector4d(double, double, double)> map;
  Box3 domain;
  /// Replaces (e3, nu) by (-e3, -nu).
  bool flip_normal = false;
  /// Closed-form shape operator in the frame built by frame3_at, when known.
  std::function<SymTensor3(double, double, double)> exact_shape;
};

struct Frame3Point {
  double u = 0.0, v = 0.0, w = 0.0;
  Eigen::Vector4d point = Eigen::Vector4d::Zero();
  std::array<Eigen::Vector4d, 3> e{};
  Eigen::Vector4d nu = Eigen::Vector4d::Zero();
  SymTensor3 shape;
  /// omega[i](j, k) = <D_{e_i} e_j, e_k>, antisymmetric in (j, k).
  std::array<Eigen::Matrix3d, 3> omega{};
  /// Same forms on the coordinate fields d/du, d/dv, d/dw.
  std::array<Eigen::Matrix3d, 3> omega_coord{};
  /// Row a holds the frame coefficients of the a-th coordinate field.
  Eigen::Matrix3d coord_to_frame = Eigen::Matrix3d::Identity();
  /// Row i holds the coordinate coefficients of e_i.
  Eigen::Matrix3d frame_to_coord = Eigen::Matrix3d::Identity();

  TangentVec3 frame_coeffs(const Eigen::Vector3d& d) const {
    const Eigen::Vector3d x = coord_to_frame.transpose() * d;
    return {x(0), x(1), x(2)};
  }
  Eigen::Matrix3d omega_along(const Eigen::Vector3d& d) const {
    return d(0) * omega_coord[0] + d(1) * omega_coord[1] + d(2) * omega_coord[2];
  }
};

Frame3Point frame3_at(const Chart3& chart, double u, double v, double w,
                      double step = fd::kStep);

/// Outer step for derivatives of quantities that are themselves finite
/// differences of the chart (Christoffel symbols, frame components of T).
inline constexpr double kNestedStep = 0x1p-8;

/// Riemann components R_ijkl = <R(e_i, e_j) e_l, e_k> in the orthonormal frame,
/// so that R_1212 is the sectional curvature of span(e1, e2).
class RiemannTensor {
 public:
  double operator()(int i, int j, int k, int l) const { return c_[index(i, j, k, l)]; }
  double& at(int i, int j, int k, int l) { return c_[index(i, j, k, l)]; }

 private:
  static std::size_t index(int i, int j, int k, int l) {
    return static_cast<std::size_t>(((i * 3 + j) * 3 + k) * 3 + l);
  }
  std::array<double, 81> c_{};
};

/// Intrinsic curvature from the induced metric only: Christoffel symbols by
/// finite differences of the metric, differentiated once more (outer `step`).
RiemannTensor intrinsic_riemann(const Chart3& chart, double u, double v, double w,
                                double step = kNestedStep);

// ---------------------------------------------------------------------------
// Grids and fields

struct NodeIndex3 {
  int i = 0;
  int j = 0;
  int k = 0;
};

struct Grid3 {
  int nu = 0, nv = 0, nw = 0;
  Box3 box;

  Grid3() = default;
  Grid3(int nu_, int nv_, int nw_, Box3 b) : nu(nu_), nv(nv_), nw(nw_), box(b) {
    if (nu < kMinGridNodes || nv < kMinGridNodes || nw < kMinGridNodes) {
      throw std::invalid_argument("grid needs at least 5 nodes per axis");
    }
  }

  double du() const { return (box.u1 - box.u0) / (nu - 1); }
  double dv() const { return (box.v1 - box.v0) / (nv - 1); }
  double dw() const { return (box.w1 - box.w0) / (nw - 1); }
  double spacing(int axis) const { return axis == 0 ? du() : axis == 1 ? dv() : dw(); }
  double u(int i) const { return box.u0 + i * du(); }
  double v(int j) const { return box.v0 + j * dv(); }
  double w(int k) const { return box.w0 + k * dw(); }
  Eigen::Vector3d position(NodeIndex3 n) const { return {u(n.i), v(n.j), w(n.k)}; }
  int extent(int axis) const { return axis == 0 ? nu : axis == 1 ? nv : nw; }
  std::size_t size() const { return static_cast<std::size_t>(nu) * nv * nw; }
  std::size_t index(NodeIndex3 n) const {
    return (static_cast<std::size_t>(n.k) * nv + n.j) * nu + n.i;
  }
  bool interior(NodeIndex3 n) const {
    auto in = [](int x, int len) { return x >= kStencilMargin && x < len - kStencilMargin; };
    return in(n.i, nu) && in(n.j, nv) && in(n.k, nw);
  }
  std::string label() const {
    return std::to_string(nu) + "x" + std::to_string(nv) + "x" + std::to_string(nw);
  }

  template <class F>
  void for_each_interior(F&& f) const {
    for (int k = kStencilMargin; k < nw - kStencilMargin; ++k)
      for (int j = kStencilMargin; j < nv - kStencilMargin; ++j)
        for (int i = kStencilMargin; i < nu - kStencilMargin; ++i) f(NodeIndex3{i, j, k});
  }
};

class HypersurfaceGrid {
 public:
  static std::shared_ptr<const HypersurfaceGrid> make(const Chart3& chart, int nu, int nv, int nw);

  const Chart3& chart() const { return chart_; }
  const Grid3& grid() const { return grid_; }
  const Frame3Point& frame(NodeIndex3 n) const { return frames_[grid_.index(n)]; }

 private:
  HypersurfaceGrid(Chart3 chart, Grid3 grid);

  Chart3 chart_;
  Grid3 grid_;
  std::vector<Frame3Point> frames_;
};

template <class T>
struct NodeField3 {
  std::shared_ptr<const HypersurfaceGrid> geometry;
  std::vector<T> values;

  NodeField3() = default;
  explicit NodeField3(std::shared_ptr<const HypersurfaceGrid> g, T fill = T{})
      : geometry(std::move(g)), values(geometry->grid().size(), fill) {}

  const Grid3& grid() const { return geometry->grid(); }
  T& operator[](NodeIndex3 n) { return values[grid().index(n)]; }
  const T& operator[](NodeIndex3 n) const { return values[grid().index(n)]; }
};

using SpinorField3 = NodeField3<Spinor>;
using TensorField3 = NodeField3<SymTensor3>;

template <class T>
T coordinate_derivative(const NodeField3<T>& f, int axis, NodeIndex3 n) {
  const Grid3& g = f.grid();
  if (!g.interior(n)) throw std::out_of_range("derivative requested at a boundary node");
  std::array<T, 5> s;
  for (int o = -2; o <= 2; ++o) {
    NodeIndex3 m = n;
    (axis == 0 ? m.i : axis == 1 ? m.j : m.k) += o;
    s[o + 2] = f[m];
  }
  return fd::first_from_samples(s, g.spacing(axis));
}

/// e_i(f), i = 1, 2, 3.
template <class T>
T frame_derivative(const NodeField3<T>& f, int i, NodeIndex3 n) {
  const auto& L = f.geometry->frame(n).frame_to_coord;
  T acc = L(i - 1, 0) * coordinate_derivative(f, 0, n);
  acc = acc + L(i - 1, 1) * coordinate_derivative(f, 1, n);
  acc = acc + L(i - 1, 2) * coordinate_derivative(f, 2, n);
  return acc;
}

// ---------------------------------------------------------------------------
// Spinor calculus and transport

/// nabla_{e_i} phi = e_i(phi) + 1/2 sum_{j<k} omega_jk(e_i) e_j . e_k . phi
Spinor spinor_cov_deriv3(const SpinorField3& field, int direction, NodeIndex3 node);

/// Matrix of e_j . e_k on the fiber (zero-based indices).
Op2 frame_bivector(int j, int k);

using TensorSource3 = std::function<SymTensor3(const Frame3Point&)>;

TensorSource3 half_shape_source3();
TensorSource3 constant_source3(SymTensor3 t);

struct HypersurfaceConnection {
  Chart3 chart;
  TensorSource3 tensor;
  int steps_per_cell = kDefaultStepsPerCell;

  HypersurfaceConnection(Chart3 c, TensorSource3 t, int steps = kDefaultStepsPerCell);

  /// Generator A with d phi / dt = -A phi along velocity d at parameter point p.
  Op2 generator(const Eigen::Vector3d& p, const Eigen::Vector3d& d) const;
};

/// Solution operator along the straight parameter segment from -> to.
Op2 propagator3(const HypersurfaceConnection& conn, const Eigen::Vector3d& from,
                const Eigen::Vector3d& to, int steps);

struct Flatness3Report {
  double max_deviation = 0.0;
  double max_density = 0.0;
  double rms_density = 0.0;
  std::size_t plaquettes = 0;
  bool flat(double tolerance = kFlatnessTolerance) const { return max_density <= tolerance; }
};

struct Solution3 {
  SpinorField3 field;              // w-line, then v-lines, then u-lines
  double path_independence = 0.0;  // sup | field - (u-line, v-lines, w-lines) |
  double path_independence_rms = 0.0;
  Flatness3Report flatness;
};

/// Solves nabla_X phi + T(X) . phi = 0 from phi0 at the first node. Throws
/// FlatnessViolation when any coordinate plaquette has holonomy density above
/// `tolerance`.
Solution3 solve3(const HypersurfaceConnection& conn,
                 const std::shared_ptr<const HypersurfaceGrid>& geometry,
                 const Spinor& phi0 = Spinor{1.0, 0.0}, double tolerance = kFlatnessTolerance);

TensorField3 half_shape_field3(const std::shared_ptr<const HypersurfaceGrid>& geometry);

/// max over i of |nabla_{e_i} phi + T(e_i) . phi|
ResidualReport verify_hypersurface_equation(const SpinorField3& field, const TensorField3& T);

/// sup over i<j, k<l of |R_ijkl + 4 T_il T_jk - 4 T_ik T_jl|
ResidualReport gauss_components_check(const TensorField3& T, double step = kNestedStep);

/// sup over i<j of |(nabla_{e_i} T)(e_j) - (nabla_{e_j} T)(e_i)| at the interior
/// nodes. T is differentiated off-grid with the given step.
ResidualReport codazzi3_check(const std::shared_ptr<const HypersurfaceGrid>& geometry,
                              const TensorSource3& T, double step = kNestedStep);

/// T(X,Y) = 1/2 Re(X . nabla_Y phi + Y . nabla_X phi, phi) / |phi|^2 on interior nodes.
TensorField3 energy_momentum3(const SpinorField3& field);

/// Sup over interior nodes of the max-abs entry of a - b.
ResidualReport compare_tensors3(const TensorField3& a, const TensorField3& b, std::string identity);

/// Sup deviation of |phi|^2 from its value at the first node.
double length_variation3(const SpinorField3& field);

// ---------------------------------------------------------------------------
// Catalog: hyperplane, round_s3(r), cylinder_s2xr(r), quadric_graph

Chart3 catalog3(std::string_view name, double radius = 1.0);

const std::vector<std::string>& catalog3_names();

bool is_catalog_hypersurface(std::string_view name);

}  // namespace spinform
