#pragma once

#include <array>
#include <complex>

#include "slicereg/slice_poly.hpp"

namespace slicereg {

/// Default central-difference step.
inline constexpr double kFiniteDifferenceStep = 1e-5;

/// First-order data of f at q0: A1 = R_{q0}f(conj q0),
/// A2 = R_{conj q0}R_{q0}f(q0).
struct DerivativeBundle {
  Quaternion q0;
  Quaternion A1;
  Quaternion A2;

  static DerivativeBundle of(const SlicePoly &f, const Quaternion &q0);
  /// v A1 + (q0 v - v conj(q0)) A2, for any v (no unit check).
  [[nodiscard]] Quaternion along(const Quaternion &v) const;
};

/// Derivative of f at q0 along the unit vector v. Throws NonUnitDirection
/// if ||v| - 1| > 1e-9.
Quaternion directional_derivative(const SlicePoly &f, const Quaternion &q0,
                                  const Quaternion &v);

/// Basis e_0..e_3 = 1, I, J, IJ adapted to q0 (I from slice_decompose,
/// J = I.orthogonal()).
std::array<Quaternion, 4> adapted_basis(const Quaternion &q0);

/// df/dx_index along the adapted basis. index in [0, 3].
Quaternion partial_derivative(const SlicePoly &f, const Quaternion &q0,
                              int index);

/// R_{q0}f(q0).
Quaternion cullen_derivative(const SlicePoly &f, const Quaternion &q0);

/// (1/2) Im(q0)^{-1} (f(q0) - f(conj q0)), which equals R_{q0}f(conj q0).
/// Throws RealPoint on the real axis.
Quaternion spherical_derivative(const SlicePoly &f, const Quaternion &q0);

using Matrix2c = std::array<std::array<std::complex<double>, 2>, 2>;

/**
 * Jacobian of f = f1 + f2 J in the coordinates z1 = x0 + I x1,
 * z2 = x2 + I x3 adapted to q0.
 *
 * `holo` is the closed form [[R1(q0), -conj R2(conj q0)],
 * [R2(q0), conj R1(conj q0)]] with R_{q0}f = R1 + R2 J. `holo_fd` and
 * `antiholo` come from central differences of f, independently of the
 * closed form; `antiholo` vanishes up to finite-difference noise.
 */
struct ComplexJacobian {
  ImaginaryUnit I;
  ImaginaryUnit J;
  Matrix2c holo;
  Matrix2c holo_fd;
  Matrix2c antiholo;
};

ComplexJacobian complex_jacobian(const SlicePoly &f, const Quaternion &q0,
                                 double step = kFiniteDifferenceStep);

/// Left q-derivative at a real point, lim h^{-1}[f(x+h) - f(x)].
Quaternion real_point_qderivative(const SlicePoly &f, double x);

/// Largest entry modulus.
double max_abs(const Matrix2c &m);

} // namespace slicereg
