#include "slicereg/spherical_series.hpp"

#include "extended.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace slicereg {

namespace {

using detail::QuaternionL;

// Replaces g by R_{p} g in place and returns g(p).
QuaternionL remainder_step(std::vector<QuaternionL> &g, const QuaternionL &p) {
  if (g.empty()) {
    return {};
  }
  QuaternionL acc = g.back();
  for (std::size_t n = g.size() - 1; n-- > 0;) {
    const QuaternionL next = g[n] + p * acc;
    g[n] = acc;
    acc = next;
  }
  g.pop_back();
  return acc;
}

QuaternionL horner(const std::vector<QuaternionL> &g, const QuaternionL &p) {
  QuaternionL acc;
  for (auto it = g.rbegin(); it != g.rend(); ++it) {
    acc = *it + p * acc;
  }
  return acc;
}

} // namespace

SphericalExpansion expand_A(const SlicePoly &f, const Quaternion &q0,
                            std::size_t N) {
  SphericalExpansion e{Sphere::through(q0), q0, {}, std::nullopt};
  e.A.reserve(N + 1);
  const QuaternionL p(q0);
  const QuaternionL pbar = p.conj();
  std::vector<QuaternionL> g(f.coeffs().begin(), f.coeffs().end());
  while (e.A.size() <= N) {
    e.A.push_back(remainder_step(g, p).to_double());
    if (e.A.size() > N) {
      break;
    }
    e.A.push_back(remainder_step(g, pbar).to_double());
  }
  return e;
}

SphericalExpansion expand_C(const SlicePoly &f, const Sphere &sphere,
                            const Quaternion &q1, const Quaternion &q2,
                            std::size_t N) {
  SphericalExpansion e{sphere, q1, {}, std::vector<Quaternion>{}};
  auto &C = *e.C;
  C.reserve(N + 2);
  const double tol = 1e-9 * (1.0 + std::abs(sphere.x0()) + sphere.y0());
  if (!sphere.contains(q1, tol) || !sphere.contains(q2, tol)) {
    throw InvalidArgument("expand_C sample points must lie on the sphere");
  }
  // Validates the pair; the returned data is not used.
  (void)sphere_affine(q1, basis::one, q2, basis::one);
  const QuaternionL p1(q1);
  const QuaternionL p2(q2);
  const QuaternionL dinv = inverse(p2 - p1);
  std::vector<QuaternionL> g(f.coeffs().begin(), f.coeffs().end());
  while (C.size() <= N) {
    const QuaternionL f1 = horner(g, p1);
    const QuaternionL f2 = horner(g, p2);
    C.push_back((dinv * (p1.conj() * f1 - p2.conj() * f2)).to_double());
    C.push_back((dinv * (f2 - f1)).to_double());
    remainder_step(g, p1);
    remainder_step(g, p1.conj());
  }
  C.resize(N + 1);
  return e;
}

std::vector<Quaternion> c_coefficients_by_division(const SlicePoly &f,
                                                   const Sphere &sphere,
                                                   std::size_t N) {
  std::vector<Quaternion> C;
  C.reserve(N + 2);
  SlicePoly g = f;
  while (C.size() <= N) {
    auto [quotient, remainder] = quadratic_div(g, sphere);
    C.push_back(remainder[0]);
    C.push_back(remainder[1]);
    g = std::move(quotient);
  }
  C.resize(N + 1);
  return C;
}

namespace {

const std::vector<Quaternion> &coefficients(const SphericalExpansion &e,
                                            ExpansionForm form) {
  if (form == ExpansionForm::C) {
    if (!e.C) {
      throw InvalidArgument("expansion has no C coefficients");
    }
    return *e.C;
  }
  return e.A;
}

Quaternion at(const std::vector<Quaternion> &v, std::size_t n) {
  return n < v.size() ? v[n] : Quaternion{};
}

} // namespace

Quaternion eval_expansion(const SphericalExpansion &e, const Quaternion &q,
                          std::size_t up_to, ExpansionForm form) {
  const auto &coef = coefficients(e, form);
  if (coef.empty() || 2 * up_to > coef.size() - 1) {
    throw InvalidArgument("expansion truncated below the requested order");
  }
  const QuaternionL qL(q);
  const QuaternionL shifted = qL - QuaternionL(e.sphere.x0());
  const long double y0 = e.sphere.y0();
  const QuaternionL Q = shifted * shifted + QuaternionL(y0 * y0);
  const QuaternionL linear =
      form == ExpansionForm::A ? qL - QuaternionL(e.q0) : qL;
  QuaternionL power(1.0L);
  QuaternionL sum;
  for (std::size_t n = 0; n <= up_to; ++n) {
    sum = sum + power * (QuaternionL(coef[2 * n]) +
                         linear * QuaternionL(at(coef, 2 * n + 1)));
    power = power * Q;
  }
  return sum.to_double();
}

Quaternion eval_expansion(const SphericalExpansion &e, const Quaternion &q,
                          ExpansionForm form) {
  const auto &coef = coefficients(e, form);
  if (coef.empty()) {
    return {};
  }
  return eval_expansion(e, q, (coef.size() - 1) / 2, form);
}

SlicePoly expansion_partial_poly(const SphericalExpansion &e, std::size_t up_to,
                                 ExpansionForm form) {
  const auto &coef = coefficients(e, form);
  const SlicePoly Q = SlicePoly::characteristic(e.sphere);
  const SlicePoly linear = form == ExpansionForm::A
                               ? SlicePoly::linear(e.q0)
                               : SlicePoly({Quaternion{}, basis::one});
  SlicePoly power = SlicePoly::constant(basis::one);
  SlicePoly sum;
  for (std::size_t n = 0; n <= up_to; ++n) {
    const SlicePoly term =
        SlicePoly::constant(at(coef, 2 * n)) +
        scale(linear, at(coef, 2 * n + 1));
    sum = sum + star_mul(power, term);
    power = star_mul(power, Q);
  }
  return sum;
}

Quaternion expansion_basis(const Sphere &s, const Quaternion &q0,
                           const Quaternion &q, std::size_t n) {
  const Quaternion Q = s.characteristic(q);
  Quaternion p = basis::one;
  for (std::size_t m = 0; m < n / 2; ++m) {
    p = p * Q;
  }
  return n % 2 == 1 ? p * (q - q0) : p;
}

double radius_of_convergence(std::span<const Quaternion> coeffs,
                             SeriesKind kind) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (kind == SeriesKind::polynomial) {
    return inf;
  }
  double limsup = 0.0;
  for (std::size_t n = std::max<std::size_t>(1, coeffs.size() / 2);
       n < coeffs.size(); ++n) {
    const double a = coeffs[n].norm();
    if (a > 0.0 && std::isfinite(a)) {
      limsup = std::max(limsup, std::pow(a, 1.0 / static_cast<double>(n)));
    }
  }
  return limsup == 0.0 ? inf : 1.0 / limsup;
}

USet::USet(double x0, double y0, double R, double boundary_rel)
    : sphere_(x0, y0), R_(R), boundary_rel_(boundary_rel) {
  if (!(R > 0.0) || !std::isfinite(R)) {
    throw InvalidArgument("U(x0 + y0 S, R) needs a finite R > 0");
  }
  if (!(boundary_rel > 0.0)) {
    throw InvalidArgument("boundary tolerance must be positive");
  }
}

Membership u_membership(const Quaternion &q, const USet &U) {
  return u_membership(q, U, U.boundary_tol());
}

Membership u_membership(const Quaternion &q, const USet &U, double tol) {
  const double diff = U.sphere().characteristic(q).norm() - U.R() * U.R();
  if (std::abs(diff) <= tol) {
    return Membership::boundary;
  }
  return diff < 0.0 ? Membership::inside : Membership::outside;
}

TopologyInfo u_topology(const USet &U) {
  return u_topology(U, U.boundary_tol());
}

TopologyInfo u_topology(const USet &U, double tol) {
  const double gap = U.R() - U.y0();
  Topology kind = Topology::connected;
  if (gap < -tol) {
    kind = Topology::two_components;
  } else if (gap <= tol) {
    kind = Topology::figure_eight;
  }
  return {kind, gap > 0.0};
}

std::vector<LemniscatePoint> lemniscate_boundary(const USet &U,
                                                 const ImaginaryUnit &I,
                                                 std::size_t M) {
  if (M < 8 || M % 2 != 0) {
    throw InvalidArgument("lemniscate sampling needs an even M >= 8");
  }
  const std::size_t half = M / 2;
  const double R2 = U.R() * U.R();
  const double y02 = U.y0() * U.y0();
  const double step = 2.0 * std::numbers::pi / static_cast<double>(half);

  std::vector<std::complex<double>> branch(half);
  std::complex<double> prev;
  for (std::size_t k = 0; k < half; ++k) {
    const double theta = step * static_cast<double>(k);
    std::complex<double> s = std::sqrt(R2 * std::polar(1.0, theta) - y02);
    if (k > 0 && std::abs(s - prev) > std::abs(s + prev)) {
      s = -s;
    }
    branch[k] = s;
    prev = s;
  }

  const bool one_loop = u_topology(U).kind == Topology::connected;
  std::vector<LemniscatePoint> out;
  out.reserve(M);
  for (int sign : {1, -1}) {
    const int loop = (sign == 1 || one_loop) ? 0 : 1;
    for (std::size_t k = 0; k < half; ++k) {
      const std::complex<double> z =
          U.x0() + static_cast<double>(sign) * branch[k];
      out.push_back({step * static_cast<double>(k), I.embed(z), loop});
    }
  }
  return out;
}

ModulusBounds modulus_bounds(const Quaternion &q, const Sphere &sphere) {
  const double r2 = sphere.characteristic(q).norm();
  const double root = std::sqrt(r2 + sphere.y0() * sphere.y0());
  return {root - sphere.y0(), root + sphere.y0()};
}

} // namespace slicereg
