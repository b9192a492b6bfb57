#include "slicereg/reg_calculus.hpp"

#include <algorithm>

#include "slicereg/spherical_series.hpp"

namespace slicereg {

namespace {

using cplx = std::complex<double>;

struct SplitValue {
  cplx first;  // component in L_I
  cplx second; // coefficient of J
};

SplitValue split(const Quaternion &v, const ImaginaryUnit &I,
                 const ImaginaryUnit &J) {
  const Quaternion K = I.value() * J.value();
  const Quaternion &Jv = J.value();
  return {I.project(v), {v.x * Jv.x + v.y * Jv.y + v.z * Jv.z,
                         v.x * K.x + v.y * K.y + v.z * K.z}};
}

} // namespace

DerivativeBundle DerivativeBundle::of(const SlicePoly &f,
                                      const Quaternion &q0) {
  const auto e = expand_A(f, q0, 2);
  return {q0, e.A[1], e.A[2]};
}

Quaternion DerivativeBundle::along(const Quaternion &v) const {
  return v * A1 + (q0 * v - v * q0.conj()) * A2;
}

Quaternion directional_derivative(const SlicePoly &f, const Quaternion &q0,
                                  const Quaternion &v) {
  if (std::abs(v.norm() - 1.0) > 1e-9) {
    throw NonUnitDirection("direction must have unit modulus");
  }
  return DerivativeBundle::of(f, q0).along(v);
}

std::array<Quaternion, 4> adapted_basis(const Quaternion &q0) {
  const ImaginaryUnit I = slice_decompose(q0).I;
  const ImaginaryUnit J = I.orthogonal();
  return {basis::one, I.value(), J.value(), I.value() * J.value()};
}

Quaternion partial_derivative(const SlicePoly &f, const Quaternion &q0,
                              int index) {
  if (index < 0 || index > 3) {
    throw InvalidArgument("basis index must be in [0, 3]");
  }
  const auto e = adapted_basis(q0);
  return DerivativeBundle::of(f, q0).along(e[static_cast<std::size_t>(index)]);
}

Quaternion cullen_derivative(const SlicePoly &f, const Quaternion &q0) {
  return remainder_div(f, q0).quotient(q0);
}

Quaternion spherical_derivative(const SlicePoly &f, const Quaternion &q0) {
  const Quaternion im = q0.im();
  if (im.norm() <= kZeroTol * (1.0 + q0.norm())) {
    throw RealPoint("spherical derivative is undefined on the real axis");
  }
  return 0.5 * (im.inverse() * (f(q0) - f(q0.conj())));
}

ComplexJacobian complex_jacobian(const SlicePoly &f, const Quaternion &q0,
                                 double step) {
  const ImaginaryUnit I = slice_decompose(q0).I;
  const ImaginaryUnit J = I.orthogonal();
  const std::array<Quaternion, 4> e{basis::one, I.value(), J.value(),
                                    I.value() * J.value()};

  const SlicePoly R = remainder_div(f, q0).quotient;
  const SplitValue at_q0 = split(R(q0), I, J);
  const SplitValue at_conj = split(R(q0.conj()), I, J);

  ComplexJacobian jac{I, J, {}, {}, {}};
  jac.holo = {{{at_q0.first, -std::conj(at_conj.second)},
               {at_q0.second, std::conj(at_conj.first)}}};

  std::array<SplitValue, 4> d{};
  for (std::size_t i = 0; i < 4; ++i) {
    const Quaternion diff =
        (f(q0 + step * e[i]) - f(q0 - step * e[i])) / (2.0 * step);
    d[i] = split(diff, I, J);
  }
  const cplx iu{0.0, 1.0};
  const auto component = [&](std::size_t i, std::size_t row) {
    return row == 0 ? d[i].first : d[i].second;
  };
  for (std::size_t row = 0; row < 2; ++row) {
    const cplx dx0 = component(0, row);
    const cplx dx1 = component(1, row);
    const cplx dx2 = component(2, row);
    const cplx dx3 = component(3, row);
    jac.holo_fd[row] = {0.5 * (dx0 - iu * dx1), 0.5 * (dx2 - iu * dx3)};
    jac.antiholo[row] = {0.5 * (dx0 + iu * dx1), 0.5 * (dx2 + iu * dx3)};
  }
  return jac;
}

Quaternion real_point_qderivative(const SlicePoly &f, double x) {
  return cullen_derivative(f, Quaternion{x});
}

double max_abs(const Matrix2c &m) {
  double out = 0.0;
  for (const auto &row : m) {
    for (const auto &v : row) {
      out = std::max(out, std::abs(v));
    }
  }
  return out;
}

} // namespace slicereg
