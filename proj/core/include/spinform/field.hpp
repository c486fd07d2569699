#pragma once

// Uniform parameter grids over a chart and fields sampled on their nodes.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinform/clifford.hpp"
#include "spinform/surface_chart.hpp"

namespace spinform {

/// Nodes closer than this to the boundary carry no derivative data.
inline constexpr int kStencilMargin = 2;
inline constexpr int kMinGridNodes = 2 * kStencilMargin + 1;

struct NodeIndex {
  int i = 0;
  int j = 0;
};

struct Grid2 {
  int nu = 0;
  int nv = 0;
  Rect rect;

  Grid2() = default;
  Grid2(int nu_, int nv_, Rect r) : nu(nu_), nv(nv_), rect(r) {
    if (nu < kMinGridNodes || nv < kMinGridNodes) {
      throw std::invalid_argument("grid needs at least 5 nodes per axis");
    }
  }

  double du() const { return (rect.u1 - rect.u0) / (nu - 1); }
  double dv() const { return (rect.v1 - rect.v0) / (nv - 1); }
  double u(int i) const { return rect.u0 + i * du(); }
  double v(int j) const { return rect.v0 + j * dv(); }
  std::size_t size() const { return static_cast<std::size_t>(nu) * nv; }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nu + i; }
  bool interior(int i, int j) const {
    return i >= kStencilMargin && i < nu - kStencilMargin && j >= kStencilMargin &&
           j < nv - kStencilMargin;
  }
  std::string label() const { return std::to_string(nu) + "x" + std::to_string(nv); }

  template <class F>
  void for_each_interior(F&& f) const {
    for (int j = kStencilMargin; j < nv - kStencilMargin; ++j)
      for (int i = kStencilMargin; i < nu - kStencilMargin; ++i) f(NodeIndex{i, j});
  }
};

/// A chart together with its frame data at every grid node.
class SurfaceGrid {
 public:
  static std::shared_ptr<const SurfaceGrid> make(const Chart& chart, int nu, int nv);

  const Chart& chart() const { return chart_; }
  const Grid2& grid() const { return grid_; }
  const FramePoint& frame(NodeIndex n) const { return frames_[grid_.index(n.i, n.j)]; }

 private:
  SurfaceGrid(Chart chart, Grid2 grid);

  Chart chart_;
  Grid2 grid_;
  std::vector<FramePoint> frames_;
};

/// Node values over a SurfaceGrid. Fields obtained by differentiation hold
/// meaningful values on interior nodes only.
template <class T>
struct NodeField {
  std::shared_ptr<const SurfaceGrid> geometry;
  std::vector<T> values;

  NodeField() = default;
  explicit NodeField(std::shared_ptr<const SurfaceGrid> g, T fill = T{})
      : geometry(std::move(g)), values(geometry->grid().size(), fill) {}

  const Grid2& grid() const { return geometry->grid(); }
  T& operator[](NodeIndex n) { return values[grid().index(n.i, n.j)]; }
  const T& operator[](NodeIndex n) const { return values[grid().index(n.i, n.j)]; }
};

using SpinorField = NodeField<Spinor>;
using TensorField = NodeField<SymTensor2>;
using MatrixField = NodeField<Eigen::Matrix2d>;
using ScalarField = NodeField<double>;

/// Derivative along the a-th coordinate (0 = u, 1 = v) by a 5-point stencil.
template <class T>
T coordinate_derivative(const NodeField<T>& f, int axis, NodeIndex n) {
  const Grid2& g = f.grid();
  if (!g.interior(n.i, n.j)) throw std::out_of_range("derivative requested at a boundary node");
  std::array<T, 5> s;
  for (int k = -2; k <= 2; ++k) {
    s[k + 2] = axis == 0 ? f[{n.i + k, n.j}] : f[{n.i, n.j + k}];
  }
  return fd::first_from_samples(s, axis == 0 ? g.du() : g.dv());
}

/// e_i(f) at a node, i = 1, 2, through the frame-to-coordinate matrix.
template <class T>
T frame_derivative(const NodeField<T>& f, int i, NodeIndex n) {
  const auto& L = f.geometry->frame(n).frame_to_coord;
  const T du = coordinate_derivative(f, 0, n);
  const T dv = coordinate_derivative(f, 1, n);
  return T(L(i - 1, 0) * du + L(i - 1, 1) * dv);
}

}  // namespace spinform
