#include "slicereg/zeros_mult.hpp"

#include <cmath>

#include "slicereg/spherical_series.hpp"

namespace slicereg {

namespace {

// Rounding scale of f(p): rel * (1 + sum |a_n| |p|^n).
double value_threshold(const SlicePoly &f, const ZeroTolerance &tol,
                       const Quaternion &p) {
  const double r = p.norm();
  double scale = 0.0;
  double power = 1.0;
  for (const auto &a : f.coeffs()) {
    scale += a.norm() * power;
    power *= r;
  }
  return tol.rel * (1.0 + scale);
}

void require_nonzero(const SlicePoly &f) {
  if (f.is_zero()) {
    throw ZeroFunction("multiplicity of the zero function is undefined");
  }
}

double on_sphere_tol(const Sphere &s) {
  return 1e-8 * (1.0 + std::abs(s.x0()) + s.y0());
}

} // namespace

int classical_multiplicity(const SlicePoly &f, const Quaternion &q0,
                           ZeroTolerance tol) {
  require_nonzero(f);
  int n = 0;
  SlicePoly g = f;
  while (!g.is_zero()) {
    auto [value, quotient] = remainder_div(g, q0);
    if (value.norm() > value_threshold(g, tol, q0)) {
      break;
    }
    ++n;
    g = std::move(quotient);
  }
  return n;
}

SphericalFactor spherical_multiplicity(const SlicePoly &f, const Sphere &s,
                                       ZeroTolerance tol) {
  require_nonzero(f);
  int m = 0;
  SlicePoly g = f;
  while (g.degree() >= 2) {
    auto [quotient, remainder] = quadratic_div(g, s);
    if (remainder.max_coeff_norm() > tol.threshold(g)) {
      break;
    }
    ++m;
    g = std::move(quotient);
  }
  return {2 * m, g};
}

SphereZero sphere_zero(const SlicePoly &f, const Sphere &s, ZeroTolerance tol) {
  if (f.is_zero()) {
    return WholeSphere{};
  }
  if (s.degenerate()) {
    const Quaternion x0{s.x0()};
    const auto remainder = quadratic_div(f, s).remainder;
    if (remainder.max_coeff_norm() <= tol.threshold(f)) {
      return WholeSphere{};
    }
    if (f(x0).norm() <= value_threshold(f, tol, x0)) {
      return x0;
    }
    return NoZero{};
  }

  const ImaginaryUnit I{};
  const Quaternion q1 = s.point(I);
  const Quaternion q2 = q1.conj();
  const Quaternion f1 = f(q1);
  const Quaternion f2 = f(q2);
  const double vthr = value_threshold(f, tol, q1);
  if (f1.norm() <= vthr && f2.norm() <= vthr) {
    return WholeSphere{};
  }
  const SphereAffine affine = sphere_affine(q1, f1, q2, f2);
  if (affine.c.norm() <= kZeroTol * (1.0 + affine.b.norm())) {
    return NoZero{};
  }
  const Quaternion p = -(affine.b * affine.c.inverse());
  if (p.im_norm() == 0.0) {
    return NoZero{};
  }
  // Snap onto the sphere and accept only a genuine zero there.
  const Quaternion snapped =
      Quaternion{s.x0()} + ImaginaryUnit::normalized(p).value() * s.y0();
  if (f(snapped).norm() <= value_threshold(f, tol, snapped)) {
    return snapped;
  }
  return NoZero{};
}

IsolatedFactor isolated_multiplicity(const SlicePoly &tilde_f, const Sphere &s,
                                     ZeroTolerance tol) {
  IsolatedFactor out;
  out.residual = tilde_f;
  SphereZero zero = sphere_zero(tilde_f, s, tol);
  if (std::holds_alternative<WholeSphere>(zero)) {
    throw InvalidArgument("function vanishes on the whole sphere");
  }
  while (const auto *p = std::get_if<Quaternion>(&zero)) {
    if (!out.factors.empty()) {
      const Quaternion prev = out.factors.back();
      if ((*p - prev.conj()).norm() <= on_sphere_tol(s)) {
        throw InconsistentFactorization(
            "consecutive factors are conjugate: sphere divides the cofactor");
      }
    } else {
      out.point = *p;
    }
    out.factors.push_back(*p);
    out.residual = remainder_div(out.residual, *p).quotient;
    zero = sphere_zero(out.residual, s, tol);
    if (std::holds_alternative<WholeSphere>(zero)) {
      throw InconsistentFactorization("cofactor vanishes on the whole sphere");
    }
  }
  out.multiplicity = static_cast<int>(out.factors.size());
  return out;
}

MultiplicityReport multiplicity_report(const SlicePoly &f, const Sphere &s,
                                       ZeroTolerance tol) {
  auto [spherical, cofactor] = spherical_multiplicity(f, s, tol);
  auto isolated = isolated_multiplicity(cofactor, s, tol);
  return {s,
          spherical,
          isolated.point,
          isolated.multiplicity,
          std::move(isolated.factors),
          std::move(isolated.residual)};
}

ExpansionMultiplicity expansion_multiplicity(const SlicePoly &f,
                                             const Sphere &s,
                                             ZeroTolerance tol) {
  require_nonzero(f);
  const auto N = static_cast<std::size_t>(f.degree() + 1);
  std::vector<Quaternion> C;
  if (s.degenerate()) {
    C = c_coefficients_by_division(f, s, N);
  } else {
    const Quaternion q1 = s.point(ImaginaryUnit{});
    C = *expand_C(f, s, q1, q1.conj(), N).C;
  }
  const double thr = tol.threshold(f);
  std::size_t first = 0;
  while (first < C.size() && C[first].norm() <= thr) {
    ++first;
  }
  const std::size_t n = first / 2;

  ExpansionMultiplicity out;
  out.spherical = static_cast<int>(2 * n);

  SlicePoly cofactor = f;
  for (std::size_t k = 0; k < n; ++k) {
    cofactor = quadratic_div(cofactor, s).quotient;
  }
  out.has_isolated = std::holds_alternative<Quaternion>(sphere_zero(cofactor, s, tol));

  const Quaternion even = C[2 * n];
  const Quaternion odd = 2 * n + 1 < C.size() ? C[2 * n + 1] : Quaternion{};
  if (odd.norm() > thr) {
    const Quaternion inv = odd.inverse();
    out.criterion = s.contains(inv * even, on_sphere_tol(s));
    const Quaternion direct = -(even * inv);
    if (s.contains(direct, on_sphere_tol(s))) {
      out.direct_zero = direct;
    }
  }
  return out;
}

PointExpansionMultiplicity point_expansion_multiplicity(const SlicePoly &f,
                                                        const Quaternion &q0,
                                                        ZeroTolerance tol) {
  require_nonzero(f);
  const auto A = expand_A(f, q0, static_cast<std::size_t>(f.degree() + 1)).A;
  const double thr = value_threshold(f, tol, q0);
  std::size_t first = 0;
  while (first < A.size() && A[first].norm() <= thr) {
    ++first;
  }
  const std::size_t n = first / 2;
  return {static_cast<int>(2 * n), A[2 * n].norm() <= thr};
}

} // namespace slicereg
