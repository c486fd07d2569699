#include "spinform/hypersurface4.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include "spinform/spin_calculus.hpp"

namespace spinform {

namespace {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;

Vec4 eval(const Chart3& c, const Vec3& p) { return c.map(p(0), p(1), p(2)); }

Vec3 shifted(Vec3 p, int axis, double t) {
  p(axis) = t;
  return p;
}

/// Derivative of a point function along one parameter axis.
template <class F>
auto axis_first(F&& f, const Vec3& p, int axis, double h) {
  return fd::first([&](double t) { return f(shifted(p, axis, t)); }, p(axis), h);
}

Mat3 induced_metric(const Chart3& c, const Vec3& p) {
  std::array<Vec4, 3> x;
  for (int a = 0; a < 3; ++a) x[a] = axis_first([&](const Vec3& q) { return eval(c, q); }, p, a, fd::kStep);
  Mat3 g;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) g(a, b) = x[a].dot(x[b]);
  return g;
}

/// Row m*3 + a, column b holds Gamma^m_ab.
using Christoffel = Eigen::Matrix<double, 9, 3>;

Christoffel christoffel(const Chart3& c, const Vec3& p, double h) {
  const Mat3 g = induced_metric(c, p);
  const Mat3 ginv = g.inverse();
  std::array<Mat3, 3> dg;
  for (int a = 0; a < 3; ++a) {
    dg[a] = axis_first([&](const Vec3& q) { return induced_metric(c, q); }, p, a, h);
  }
  Christoffel gam;
  for (int m = 0; m < 3; ++m)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        double s = 0.0;
        for (int q = 0; q < 3; ++q) s += ginv(m, q) * (dg[a](q, b) + dg[b](q, a) - dg[q](a, b));
        gam(m * 3 + a, b) = 0.5 * s;
      }
  return gam;
}

void require_radius(double r) {
  if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
}

constexpr double kHalfWidth3 = 0.25;
constexpr double kHalfPi = std::numbers::pi / 2.0;

Box3 centred3(double uc, double vc, double wc) {
  return {uc - kHalfWidth3, uc + kHalfWidth3, vc - kHalfWidth3,
          vc + kHalfWidth3, wc - kHalfWidth3, wc + kHalfWidth3};
}

}  // namespace

Frame3Point frame3_at(const Chart3& chart, double u, double v, double w, double step) {
  if (!chart.domain.contains(u, v, w)) throw std::out_of_range("frame3_at: point outside chart domain");
  const Vec3 p(u, v, w);
  auto x = [&](const Vec3& q) { return eval(chart, q); };

  Frame3Point f;
  f.u = u;
  f.v = v;
  f.w = w;
  f.point = x(p);
  std::array<Vec4, 3> xa;
  for (int a = 0; a < 3; ++a) xa[a] = axis_first(x, p, a, step);
  std::array<std::array<Vec4, 3>, 3> xab;
  for (int a = 0; a < 3; ++a) {
    xab[a][a] = fd::second([&](double t) { return x(shifted(p, a, t)); }, p(a), step);
    for (int b = a + 1; b < 3; ++b) {
      xab[a][b] = fd::mixed(
          [&](double s, double t) { return x(shifted(shifted(p, a, s), b, t)); }, p(a), p(b), step);
      xab[b][a] = xab[a][b];
    }
  }

  Mat3 g;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) g(a, b) = xa[a].dot(xa[b]);
  if (g.determinant() <= 1e-8) {
    throw std::domain_error("frame3_at: degenerate chart point in " + chart.name);
  }
  Eigen::LLT<Mat3> llt(g);
  if (llt.info() != Eigen::Success) {
    throw std::domain_error("frame3_at: degenerate chart point in " + chart.name);
  }
  Mat3 C = llt.matrixL();
  Mat3 L = C.inverse();

  for (int i = 0; i < 3; ++i) f.e[i] = L(i, 0) * xa[0] + L(i, 1) * xa[1] + L(i, 2) * xa[2];
  f.nu = cofactor_normal(f.e[0], f.e[1], f.e[2]).normalized();
  if (chart.flip_normal) {
    f.e[2] = -f.e[2];
    f.nu = -f.nu;
    L.row(2) *= -1.0;
    C.col(2) *= -1.0;
  }
  f.frame_to_coord = L;
  f.coord_to_frame = C;

  Mat3 second_form;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) second_form(a, b) = xab[a][b].dot(f.nu);
  f.shape = SymTensor3::symmetrize(L * second_form * L.transpose());

  // e_j only involves x_b with b <= j, and those are orthogonal to e_k for k > j.
  for (int a = 0; a < 3; ++a) {
    Mat3 om = Mat3::Zero();
    for (int j = 0; j < 3; ++j)
      for (int k = j + 1; k < 3; ++k) {
        double s = 0.0;
        for (int b = 0; b < 3; ++b) s += L(j, b) * xab[a][b].dot(f.e[k]);
        om(j, k) = s;
        om(k, j) = -s;
      }
    f.omega_coord[a] = om;
  }
  for (int i = 0; i < 3; ++i) {
    f.omega[i] = L(i, 0) * f.omega_coord[0] + L(i, 1) * f.omega_coord[1] + L(i, 2) * f.omega_coord[2];
  }
  return f;
}

RiemannTensor intrinsic_riemann(const Chart3& chart, double u, double v, double w, double step) {
  if (!chart.domain.contains(u, v, w, 2.0 * step)) {
    throw std::out_of_range("intrinsic_riemann: stencil exits chart domain");
  }
  const Vec3 p(u, v, w);
  const Mat3 g = induced_metric(chart, p);
  const Christoffel gam = christoffel(chart, p, step);
  std::array<Christoffel, 3> dgam;
  for (int c = 0; c < 3; ++c) {
    dgam[c] = axis_first([&](const Vec3& q) { return christoffel(chart, q, step); }, p, c, step);
  }
  auto G = [&](int m, int a, int b) { return gam(m * 3 + a, b); };
  auto dG = [&](int c, int m, int a, int b) { return dgam[c](m * 3 + a, b); };

  // R(d_c, d_d) d_b = R^m_bcd d_m
  std::array<double, 81> up{};
  auto idx = [](int a, int b, int c, int d) { return ((a * 3 + b) * 3 + c) * 3 + d; };
  for (int m = 0; m < 3; ++m)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          double s = dG(c, m, d, b) - dG(d, m, c, b);
          for (int e = 0; e < 3; ++e) s += G(m, c, e) * G(e, d, b) - G(m, d, e) * G(e, c, b);
          up[idx(m, b, c, d)] = s;
        }
  // R_abcd = g(R(d_a, d_b) d_d, d_c)
  std::array<double, 81> low{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          double s = 0.0;
          for (int m = 0; m < 3; ++m) s += g(c, m) * up[idx(m, d, a, b)];
          low[idx(a, b, c, d)] = s;
        }

  const Mat3 L = frame3_at(chart, u, v, w).frame_to_coord;
  // Transform one index at a time.
  std::array<double, 81> t = low;
  for (int slot = 0; slot < 4; ++slot) {
    std::array<double, 81> next{};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          for (int d = 0; d < 3; ++d) {
            std::array<int, 4> n{a, b, c, d};
            const int target = n[slot];
            double s = 0.0;
            for (int q = 0; q < 3; ++q) {
              n[slot] = q;
              s += L(target, q) * t[idx(n[0], n[1], n[2], n[3])];
            }
            next[idx(a, b, c, d)] = s;
          }
    t = next;
  }
  RiemannTensor r;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) r.at(a, b, c, d) = t[idx(a, b, c, d)];
  return r;
}

// ---------------------------------------------------------------------------

HypersurfaceGrid::HypersurfaceGrid(Chart3 chart, Grid3 grid)
    : chart_(std::move(chart)), grid_(grid) {
  frames_.resize(grid_.size());
  for (int k = 0; k < grid_.nw; ++k)
    for (int j = 0; j < grid_.nv; ++j)
      for (int i = 0; i < grid_.nu; ++i) {
        const NodeIndex3 n{i, j, k};
        frames_[grid_.index(n)] = frame3_at(chart_, grid_.u(i), grid_.v(j), grid_.w(k));
      }
}

std::shared_ptr<const HypersurfaceGrid> HypersurfaceGrid::make(const Chart3& chart, int nu, int nv,
                                                               int nw) {
  return std::shared_ptr<const HypersurfaceGrid>(
      new HypersurfaceGrid(chart, Grid3(nu, nv, nw, chart.domain)));
}

Op2 frame_bivector(int j, int k) { return clifford::frame3(j + 1) * clifford::frame3(k + 1); }

namespace {

Op2 connection_term(const Mat3& om) {
  Op2 m = Op2::Zero();
  for (int j = 0; j < 3; ++j)
    for (int k = j + 1; k < 3; ++k) m += (0.5 * om(j, k)) * frame_bivector(j, k);
  return m;
}

TangentVec3 unit3(int i) {
  return {i == 0 ? 1.0 : 0.0, i == 1 ? 1.0 : 0.0, i == 2 ? 1.0 : 0.0};
}

}  // namespace

Spinor spinor_cov_deriv3(const SpinorField3& field, int direction, NodeIndex3 node) {
  if (direction < 1 || direction > 3) throw std::invalid_argument("direction must be 1, 2 or 3");
  const Frame3Point& f = field.geometry->frame(node);
  return frame_derivative(field, direction, node) +
         act(connection_term(f.omega[direction - 1]), field[node]);
}

TensorSource3 half_shape_source3() {
  return [](const Frame3Point& f) { return 0.5 * f.shape; };
}

TensorSource3 constant_source3(SymTensor3 t) {
  return [t](const Frame3Point&) { return t; };
}

HypersurfaceConnection::HypersurfaceConnection(Chart3 c, TensorSource3 t, int steps)
    : chart(std::move(c)), tensor(std::move(t)), steps_per_cell(steps) {
  if (steps_per_cell < 1) throw std::invalid_argument("steps per cell must be positive");
  if (!tensor) throw std::invalid_argument("hypersurface connection needs a tensor source");
}

Op2 HypersurfaceConnection::generator(const Vec3& p, const Vec3& d) const {
  const Frame3Point f = frame3_at(chart, p(0), p(1), p(2));
  return connection_term(f.omega_along(d)) + clifford::matrix3(tensor(f).apply(f.frame_coeffs(d)));
}

Op2 propagator3(const HypersurfaceConnection& conn, const Vec3& from, const Vec3& to, int steps) {
  if (steps < 1) throw std::invalid_argument("propagator: step count must be positive");
  const Vec3 d = to - from;
  auto gen = [&](double t) {
    const Vec3 p = from + t * d;
    if (!conn.chart.domain.contains(p(0), p(1), p(2))) {
      throw std::out_of_range("transport: curve exits the chart domain");
    }
    return Op2(-conn.generator(p, d));
  };
  const double h = 1.0 / steps;
  Op2 U = Op2::Identity();
  Op2 a0 = gen(0.0);
  for (int s = 0; s < steps; ++s) {
    const double t = s * h;
    const Op2 am = gen(t + 0.5 * h);
    const Op2 a1 = gen(t + h);
    const Op2 k1 = a0 * U;
    const Op2 k2 = am * (U + 0.5 * h * k1);
    const Op2 k3 = am * (U + 0.5 * h * k2);
    const Op2 k4 = a1 * (U + h * k3);
    U += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    a0 = a1;
  }
  return U;
}

namespace {

NodeIndex3 step_node(NodeIndex3 n, int axis) {
  (axis == 0 ? n.i : axis == 1 ? n.j : n.k) += 1;
  return n;
}

int coord(NodeIndex3 n, int axis) { return axis == 0 ? n.i : axis == 1 ? n.j : n.k; }

/// Edge propagators along each axis, indexed by their start node.
struct Edges3 {
  std::array<std::vector<Op2>, 3> along;
  const Grid3* grid = nullptr;
  const Op2& operator()(int axis, NodeIndex3 n) const { return along[axis][grid->index(n)]; }
};

Edges3 compute_edges3(const HypersurfaceConnection& conn, const Grid3& g) {
  Edges3 e;
  e.grid = &g;
  for (int axis = 0; axis < 3; ++axis) {
    e.along[axis].assign(g.size(), Op2::Identity());
    for (int k = 0; k < g.nw; ++k)
      for (int j = 0; j < g.nv; ++j)
        for (int i = 0; i < g.nu; ++i) {
          const NodeIndex3 n{i, j, k};
          if (coord(n, axis) + 1 >= g.extent(axis)) continue;
          e.along[axis][g.index(n)] =
              propagator3(conn, g.position(n), g.position(step_node(n, axis)), conn.steps_per_cell);
        }
  }
  return e;
}

Flatness3Report flatness3(const HypersurfaceConnection& conn, const Edges3& e) {
  const Grid3& g = *e.grid;
  Flatness3Report r;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      for (int k = 0; k < g.nw; ++k)
        for (int j = 0; j < g.nv; ++j)
          for (int i = 0; i < g.nu; ++i) {
            const NodeIndex3 n{i, j, k};
            if (coord(n, a) + 1 >= g.extent(a) || coord(n, b) + 1 >= g.extent(b)) continue;
            const Op2 loop = e(b, n).inverse() * e(a, step_node(n, b)).inverse() *
                             e(b, step_node(n, a)) * e(a, n);
            const double deviation = operator_norm(loop - Op2::Identity());
            Vec3 centre = g.position(n);
            centre(a) += 0.5 * g.spacing(a);
            centre(b) += 0.5 * g.spacing(b);
            const Mat3 C = frame3_at(conn.chart, centre(0), centre(1), centre(2)).coord_to_frame;
            const double ga = C.row(a).squaredNorm(), gb = C.row(b).squaredNorm();
            const double gab = C.row(a).dot(C.row(b));
            const double area = std::sqrt(std::max(0.0, ga * gb - gab * gab)) * g.spacing(a) * g.spacing(b);
            r.max_deviation = std::max(r.max_deviation, deviation);
            const double density = area > 0.0 ? deviation / area : 0.0;
            r.max_density = std::max(r.max_density, density);
            r.rms_density += density * density;
            ++r.plaquettes;
          }
  if (r.plaquettes) r.rms_density = std::sqrt(r.rms_density / static_cast<double>(r.plaquettes));
  return r;
}

/// Fills the field from the first node, sweeping the axes in the given order.
SpinorField3 sweep(const std::shared_ptr<const HypersurfaceGrid>& geometry, const Edges3& e,
                   const Spinor& phi0, std::array<int, 3> order) {
  const Grid3& g = geometry->grid();
  SpinorField3 f(geometry);
  std::vector<char> known(g.size(), 0);
  f[NodeIndex3{}] = phi0;
  known[0] = 1;
  for (int axis : order) {
    for (int k = 0; k < g.nw; ++k)
      for (int j = 0; j < g.nv; ++j)
        for (int i = 0; i < g.nu; ++i) {
          const NodeIndex3 n{i, j, k};
          if (!known[g.index(n)] || coord(n, axis) + 1 >= g.extent(axis)) continue;
          const NodeIndex3 m = step_node(n, axis);
          f[m] = act(e(axis, n), f[n]);
          known[g.index(m)] = 1;
        }
  }
  return f;
}

}  // namespace

Solution3 solve3(const HypersurfaceConnection& conn,
                 const std::shared_ptr<const HypersurfaceGrid>& geometry, const Spinor& phi0,
                 double tolerance) {
  const Grid3& g = geometry->grid();
  const Edges3 edges = compute_edges3(conn, g);
  Solution3 sol;
  sol.flatness = flatness3(conn, edges);
  if (!sol.flatness.flat(tolerance)) {
    throw FlatnessViolation("hypersurface connection is not flat: holonomy density " +
                                std::to_string(sol.flatness.max_density),
                            sol.flatness.max_density);
  }
  // Increasing lexicographic order visits each start node after it is known,
  // so one pass per axis suffices.
  sol.field = sweep(geometry, edges, phi0, {2, 1, 0});
  const SpinorField3 witness = sweep(geometry, edges, phi0, {0, 1, 2});
  for (std::size_t q = 0; q < g.size(); ++q) {
    const double d = (sol.field.values[q] - witness.values[q]).norm();
    sol.path_independence = std::max(sol.path_independence, d);
    sol.path_independence_rms += d * d;
  }
  sol.path_independence_rms = std::sqrt(sol.path_independence_rms / static_cast<double>(g.size()));
  return sol;
}

TensorField3 half_shape_field3(const std::shared_ptr<const HypersurfaceGrid>& geometry) {
  TensorField3 t(geometry);
  const Grid3& g = geometry->grid();
  for (int k = 0; k < g.nw; ++k)
    for (int j = 0; j < g.nv; ++j)
      for (int i = 0; i < g.nu; ++i) {
        const NodeIndex3 n{i, j, k};
        t[n] = 0.5 * geometry->frame(n).shape;
      }
  return t;
}

ResidualReport verify_hypersurface_equation(const SpinorField3& field, const TensorField3& T) {
  ResidualAccumulator acc;
  field.grid().for_each_interior([&](NodeIndex3 n) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      const Spinor r = spinor_cov_deriv3(field, i + 1, n) + mul3(T[n].apply(unit3(i)), field[n]);
      worst = std::max(worst, r.norm());
    }
    acc.add(worst);
  });
  return acc.finish("restricted_parallel", field.geometry->chart().name, 0.0, field.grid().label());
}

ResidualReport gauss_components_check(const TensorField3& T, double step) {
  const Grid3& g = T.grid();
  const double h = std::min({step, g.du(), g.dv(), g.dw()});
  const Chart3& chart = T.geometry->chart();
  ResidualAccumulator acc;
  g.for_each_interior([&](NodeIndex3 n) {
    const RiemannTensor R = intrinsic_riemann(chart, g.u(n.i), g.v(n.j), g.w(n.k), h);
    const SymTensor3& t = T[n];
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = k + 1; l < 3; ++l) {
            const double r = R(i, j, k, l) + 4.0 * t(i, l) * t(j, k) - 4.0 * t(i, k) * t(j, l);
            worst = std::max(worst, std::abs(r));
          }
    acc.add(worst);
  });
  return acc.finish("gauss_components", chart.name, 0.0, g.label());
}

ResidualReport codazzi3_check(const std::shared_ptr<const HypersurfaceGrid>& geometry,
                              const TensorSource3& T, double step) {
  if (!T) throw std::invalid_argument("codazzi3_check needs a tensor source");
  const Grid3& g = geometry->grid();
  const Chart3& chart = geometry->chart();
  const double h = std::min({step, g.du(), g.dv(), g.dw()});
  ResidualAccumulator acc;
  g.for_each_interior([&](NodeIndex3 n) {
    const Frame3Point& f = geometry->frame(n);
    const Vec3 p = g.position(n);
    std::array<Mat3, 3> dc;
    for (int a = 0; a < 3; ++a) {
      dc[a] = axis_first([&](const Vec3& q) { return T(frame3_at(chart, q(0), q(1), q(2))); }, p, a, h)
                  .matrix();
    }
    const Mat3 t = T(f).matrix();
    const Mat3& L = f.frame_to_coord;
    std::array<Mat3, 3> cov;
    for (int i = 0; i < 3; ++i) {
      const Mat3 d = L(i, 0) * dc[0] + L(i, 1) * dc[1] + L(i, 2) * dc[2];
      cov[i] = d - f.omega[i] * t + t * f.omega[i];
    }
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) worst = std::max(worst, (cov[i].row(j) - cov[j].row(i)).norm());
    acc.add(worst);
  });
  return acc.finish("codazzi", chart.name, 0.0, g.label());
}

TensorField3 energy_momentum3(const SpinorField3& field) {
  TensorField3 out(field.geometry);
  field.grid().for_each_interior([&](NodeIndex3 n) {
    const Spinor& phi = field[n];
    const double n2 = phi.norm2();
    if (!(std::sqrt(n2) > kVanishingSpinor)) {
      throw VanishingSpinor("energy_momentum3: spinor vanishes at a node");
    }
    std::array<Spinor, 3> nabla;
    for (int i = 0; i < 3; ++i) nabla[i] = spinor_cov_deriv3(field, i + 1, n);
    Mat3 m;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        m(a, b) = 0.5 *
                  (re_inner(mul3(unit3(a), nabla[b]), phi) + re_inner(mul3(unit3(b), nabla[a]), phi)) /
                  n2;
      }
    out[n] = SymTensor3::symmetrize(m);
  });
  return out;
}

ResidualReport compare_tensors3(const TensorField3& a, const TensorField3& b, std::string identity) {
  ResidualAccumulator acc;
  a.grid().for_each_interior([&](NodeIndex3 n) { acc.add((a[n] - b[n]).max_abs()); });
  return acc.finish(std::move(identity), a.geometry->chart().name, 0.0, a.grid().label());
}

double length_variation3(const SpinorField3& field) {
  if (field.values.empty()) return 0.0;
  const double ref = field.values.front().norm2();
  double worst = 0.0;
  for (const Spinor& s : field.values) worst = std::max(worst, std::abs(s.norm2() - ref));
  return worst;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& catalog3_names() {
  static const std::vector<std::string> names = {"hyperplane", "round_s3", "cylinder_s2xr",
                                                 "quadric_graph"};
  return names;
}

bool is_catalog_hypersurface(std::string_view name) {
  const auto& n = catalog3_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

Chart3 catalog3(std::string_view name, double radius) {
  Chart3 c;
  c.name = std::string(name);
  if (name == "hyperplane") {
    c.map = [](double u, double v, double w) { return Vec4(u, v, w, 0.0); };
    c.domain = centred3(0.0, 0.0, 0.0);
    c.exact_shape = [](double, double, double) { return SymTensor3(); };
  } else if (name == "round_s3") {
    require_radius(radius);
    c.map = [radius](double a, double b, double t) {
      return Vec4(radius * std::cos(a), radius * std::sin(a) * std::cos(b),
                  radius * std::sin(a) * std::sin(b) * std::cos(t),
                  radius * std::sin(a) * std::sin(b) * std::sin(t));
    };
    c.domain = centred3(kHalfPi, kHalfPi, 0.0);
    c.exact_shape = [radius](double, double, double) { return (1.0 / radius) * SymTensor3::identity(); };
  } else if (name == "cylinder_s2xr") {
    require_radius(radius);
    c.map = [radius](double u, double v, double w) {
      return Vec4(radius * std::sin(v) * std::cos(u), radius * std::sin(v) * std::sin(u),
                  radius * std::cos(v), w);
    };
    c.domain = centred3(0.0, kHalfPi, 0.0);
    c.flip_normal = true;
    c.exact_shape = [radius](double, double, double) {
      return SymTensor3::diagonal(1.0 / radius, 1.0 / radius, 0.0);
    };
  } else if (name == "quadric_graph") {
    c.map = [](double u, double v, double w) { return Vec4(u, v, w, u * u + v * v - w * w); };
    // Smaller box: the shape operator varies quickly away from the origin.
    c.domain = {-0.1, 0.1, -0.1, 0.1, -0.1, 0.1};
    // Graph of f: g = I + grad f grad f^T, second form Hess f / sqrt(1 + |grad f|^2).
    c.exact_shape = [](double u, double v, double w) {
      const Vec3 grad(2.0 * u, 2.0 * v, -2.0 * w);
      const Mat3 g = Mat3::Identity() + grad * grad.transpose();
      const Mat3 second = Vec3(2.0, 2.0, -2.0).asDiagonal() * (1.0 / std::sqrt(1.0 + grad.squaredNorm()));
      const Mat3 L = Mat3(Eigen::LLT<Mat3>(g).matrixL()).inverse();
      return SymTensor3::symmetrize(L * second * L.transpose());
    };
  } else {
    throw std::invalid_argument("unknown hypersurface: " + std::string(name));
  }
  return c;
}

}  // namespace spinform
