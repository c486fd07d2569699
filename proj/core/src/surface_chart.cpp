#include "spinform/surface_chart.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Geometry>
#include <Eigen/LU>

namespace spinform {

double SymTensor2::max_abs() const {
  return std::max({std::abs(t11_), std::abs(t12_), std::abs(t22_)});
}

Eigen::Vector4d cofactor_normal(const Eigen::Vector4d& a, const Eigen::Vector4d& b,
                                const Eigen::Vector4d& c) {
  Eigen::Matrix4d m;
  m.col(0) = a;
  m.col(1) = b;
  m.col(2) = c;
  Eigen::Vector4d n;
  for (int i = 0; i < 4; ++i) {
    m.col(3) = Eigen::Vector4d::Unit(i);
    n(i) = m.determinant();
  }
  return n;
}

namespace {

AmbientVec positive_normal(const ModelSpace& space, const AmbientVec& p, const AmbientVec& e1,
                           const AmbientVec& e2) {
  if (space.kind == SpaceKind::R3) {
    const Eigen::Vector3d n = Eigen::Vector3d(e1).cross(Eigen::Vector3d(e2));
    return AmbientVec(n.normalized());
  }
  Eigen::Vector4d n = cofactor_normal(Eigen::Vector4d(p), Eigen::Vector4d(e1), Eigen::Vector4d(e2));
  const auto sig = space.signature();
  for (int i = 0; i < 4; ++i) n(i) *= sig[i];
  AmbientVec nu(n);
  return nu / std::sqrt(metric(space, nu, nu));
}

}  // namespace

FramePoint frame_at(const Chart& chart, double u, double v, double step) {
  if (!chart.domain.contains(u, v)) throw std::out_of_range("frame_at: point outside chart domain");
  const ModelSpace& space = chart.space;
  auto x = [&](double s, double t) { return chart.eval(s, t); };

  FramePoint f;
  f.u = u;
  f.v = v;
  f.point = x(u, v);
  const AmbientVec xu = fd::first([&](double s) { return x(s, v); }, u, step);
  const AmbientVec xv = fd::first([&](double t) { return x(u, t); }, v, step);
  const AmbientVec xuu =
      tangent_project(space, f.point, fd::second([&](double s) { return x(s, v); }, u, step));
  const AmbientVec xvv =
      tangent_project(space, f.point, fd::second([&](double t) { return x(u, t); }, v, step));
  const AmbientVec xuv = tangent_project(space, f.point, fd::mixed(x, u, v, step));

  const double guu = metric(space, xu, xu);
  const double guv = metric(space, xu, xv);
  const double gvv = metric(space, xv, xv);
  if (guu * gvv - guv * guv <= 1e-8 || guu <= 0.0) {
    throw std::domain_error("frame_at: degenerate chart point in " + chart.name);
  }

  // Cholesky g = C C^T; frame e = C^{-1} (x_u, x_v).
  const double c11 = std::sqrt(guu);
  const double c21 = guv / c11;
  const double c22 = std::sqrt(gvv - c21 * c21);
  Eigen::Matrix2d L;
  L << 1.0 / c11, 0.0, -c21 / (c11 * c22), 1.0 / c22;
  Eigen::Matrix2d C;
  C << c11, 0.0, c21, c22;

  f.e1 = L(0, 0) * xu;
  f.e2 = L(1, 0) * xu + L(1, 1) * xv;
  f.nu = positive_normal(space, f.point, f.e1, f.e2);
  if (chart.flip_normal) {
    f.e2 = -f.e2;
    f.nu = -f.nu;
    L.row(1) *= -1.0;
    C.col(1) *= -1.0;
  }
  f.frame_to_coord = L;
  f.coord_to_frame = C;

  Eigen::Matrix2d second_form;
  second_form << metric(space, xuu, f.nu), metric(space, xuv, f.nu), metric(space, xuv, f.nu),
      metric(space, xvv, f.nu);
  f.shape = SymTensor2::symmetrize(L * second_form * L.transpose());
  f.mean_curvature = 0.5 * f.shape.trace();

  f.omega12_coord = {L(0, 0) * metric(space, xuu, f.e2), L(0, 0) * metric(space, xuv, f.e2)};
  for (int i = 0; i < 2; ++i) {
    f.omega12[i] = L(i, 0) * f.omega12_coord[0] + L(i, 1) * f.omega12_coord[1];
  }
  return f;
}

double gauss_curvature(const Chart& chart, double u, double v, double step) {
  if (!chart.domain.contains(u, v, 2.0 * step)) {
    throw std::out_of_range("gauss_curvature: stencil exits chart domain");
  }
  const ModelSpace& space = chart.space;
  // (E, F, G) from the first fundamental form only.
  auto fff = [&](double s, double t) -> Eigen::Vector3d {
    const AmbientVec xu = fd::first([&](double a) { return chart.eval(a, t); }, s, fd::kStep);
    const AmbientVec xv = fd::first([&](double b) { return chart.eval(s, b); }, t, fd::kStep);
    return {metric(space, xu, xu), metric(space, xu, xv), metric(space, xv, xv)};
  };
  const Eigen::Vector3d m = fff(u, v);
  const Eigen::Vector3d mu = fd::first([&](double s) { return fff(s, v); }, u, step);
  const Eigen::Vector3d mv = fd::first([&](double t) { return fff(u, t); }, v, step);
  const Eigen::Vector3d muu = fd::second([&](double s) { return fff(s, v); }, u, step);
  const Eigen::Vector3d mvv = fd::second([&](double t) { return fff(u, t); }, v, step);
  const Eigen::Vector3d muv = fd::mixed(fff, u, v, step);

  const double E = m(0), F = m(1), G = m(2);
  const double Eu = mu(0), Fu = mu(1), Gu = mu(2);
  const double Ev = mv(0), Fv = mv(1), Gv = mv(2);
  const double Evv = mvv(0), Fuv = muv(1), Guu = muu(2);

  Eigen::Matrix3d a;
  a << -0.5 * Evv + Fuv - 0.5 * Guu, 0.5 * Eu, Fu - 0.5 * Ev,
       Fv - 0.5 * Gu, E, F,
       0.5 * Gv, F, G;
  Eigen::Matrix3d b;
  b << 0.0, 0.5 * Ev, 0.5 * Gu,
       0.5 * Ev, E, F,
       0.5 * Gu, F, G;
  const double w = E * G - F * F;
  return (a.determinant() - b.determinant()) / (w * w);
}

}  // namespace spinform
