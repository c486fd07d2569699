#pragma once

// Fourth-order central difference stencils.
//
// Weights are kept as integers and samples are differenced against the centre
// value, so affine maps are differentiated exactly when the step is dyadic.

#include <array>
#include <stdexcept>
#include <type_traits>

namespace spinform::fd {

/// Default step for derivatives of closed-form maps (2^-10, about 1e-3).
inline constexpr double kStep = 0x1p-10;

/// Offsets -2..2, to be divided by 12 h (first) or 12 h^2 (second).
inline constexpr std::array<double, 5> kFirst = {1.0, -8.0, 0.0, 8.0, -1.0};
inline constexpr std::array<double, 5> kSecond = {-1.0, 16.0, -30.0, 16.0, -1.0};

inline void check_step(double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
}

/// f'(t) for any callable returning a vector-space value.
template <class F>
auto first(F&& f, double t, double h) {
  check_step(h);
  using V = std::decay_t<decltype(f(t))>;
  const V c = f(t);
  V acc = kFirst[0] * V(f(t - 2.0 * h) - c);
  acc += kFirst[1] * V(f(t - h) - c);
  acc += kFirst[3] * V(f(t + h) - c);
  acc += kFirst[4] * V(f(t + 2.0 * h) - c);
  return V((1.0 / (12.0 * h)) * acc);
}

template <class F>
auto second(F&& f, double t, double h) {
  check_step(h);
  using V = std::decay_t<decltype(f(t))>;
  const V c = f(t);
  V acc = kSecond[0] * V(f(t - 2.0 * h) - c);
  acc += kSecond[1] * V(f(t - h) - c);
  acc += kSecond[3] * V(f(t + h) - c);
  acc += kSecond[4] * V(f(t + 2.0 * h) - c);
  return V((1.0 / (12.0 * h * h)) * acc);
}

/// d^2 f / ds dt at (s, t), tensor product of first-derivative stencils.
template <class F>
auto mixed(F&& f, double s, double t, double h) {
  check_step(h);
  using V = std::decay_t<decltype(f(s, t))>;
  const V c = f(s, t);
  V acc = (kFirst[0] * kFirst[0]) * V(f(s - 2.0 * h, t - 2.0 * h) - c);
  for (int i = 0; i < 5; ++i) {
    if (i == 2) continue;
    for (int j = 0; j < 5; ++j) {
      if (j == 2 || (i == 0 && j == 0)) continue;
      acc += (kFirst[i] * kFirst[j]) * V(f(s + (i - 2) * h, t + (j - 2) * h) - c);
    }
  }
  return V((1.0 / (144.0 * h * h)) * acc);
}

/// First derivative from five equally spaced samples centred on index 2.
template <class T>
T first_from_samples(const std::array<T, 5>& s, double h) {
  check_step(h);
  T acc = kFirst[0] * T(s[0] - s[2]);
  acc += kFirst[1] * T(s[1] - s[2]);
  acc += kFirst[3] * T(s[3] - s[2]);
  acc += kFirst[4] * T(s[4] - s[2]);
  return T((1.0 / (12.0 * h)) * acc);
}

}  // namespace spinform::fd
