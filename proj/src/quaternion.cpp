#include "slicereg/quaternion.hpp"

#include <ostream>

namespace slicereg {

namespace {

bool is_zero(const Quaternion &q) {
  const double n = q.norm();
  return n <= kZeroTol * (1.0 + n);
}

double dot3(const Quaternion &a, const Quaternion &b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

Quaternion cross3(const Quaternion &a, const Quaternion &b) {
  return {0.0, a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

// Points handed to the Representation Formula must sit on the sphere up to
// this relative slack.
constexpr double kOnSphereTol = 1e-9;

} // namespace

Quaternion Quaternion::inverse() const {
  if (is_zero(*this)) {
    throw DivisionByZero("inverse of a zero quaternion");
  }
  return conj() / norm2();
}

std::ostream &operator<<(std::ostream &os, const Quaternion &q) {
  return os << '[' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ']';
}

ImaginaryUnit::ImaginaryUnit(const Quaternion &u) : u_(u) {
  if (std::abs(u.w) > kUnitTol || std::abs(u.norm() - 1.0) > kUnitTol) {
    throw InvalidArgument("imaginary unit must satisfy Re(u) = 0, |u| = 1");
  }
}

ImaginaryUnit ImaginaryUnit::normalized(const Quaternion &v) {
  const double n = v.im_norm();
  if (n <= kZeroTol * (1.0 + std::abs(v.w))) {
    throw InvalidArgument("cannot normalize a vanishing imaginary part");
  }
  return {v.im() / n, Unchecked{}};
}

ImaginaryUnit ImaginaryUnit::operator-() const { return {-u_, Unchecked{}}; }

ImaginaryUnit ImaginaryUnit::orthogonal() const {
  for (const Quaternion &candidate : {basis::j, basis::k, basis::i}) {
    const Quaternion r = candidate - u_ * dot3(candidate, u_);
    const double n = r.norm();
    if (n > 0.5) {
      return {r / n, Unchecked{}};
    }
  }
  // Unreachable: a unit vector cannot be within 0.5 of all three axes' spans.
  throw InvalidArgument("no orthogonal unit found");
}

std::complex<double> ImaginaryUnit::project(const Quaternion &q) const {
  return {q.w, dot3(q, u_)};
}

double ImaginaryUnit::off_plane(const Quaternion &q) const {
  return (q.im() - u_ * dot3(q, u_)).norm();
}

Sphere::Sphere(double x0, double y0) : x0_(x0), y0_(y0) {
  if (!std::isfinite(x0) || !std::isfinite(y0) || y0 < 0.0) {
    throw InvalidArgument("sphere needs finite x0 and y0 >= 0");
  }
}

Sphere Sphere::through(const Quaternion &q) { return {q.w, q.im_norm()}; }

Quaternion Sphere::characteristic(const Quaternion &q) const {
  const Quaternion d = q - Quaternion{x0_};
  return d * d + Quaternion{y0_ * y0_};
}

bool Sphere::contains(const Quaternion &q, double tol) const {
  return std::abs(q.w - x0_) <= tol && std::abs(q.im_norm() - y0_) <= tol;
}

SliceCoordinates slice_decompose(const Quaternion &q) {
  const double y = q.im_norm();
  if (y == 0.0) {
    return {q.w, 0.0, ImaginaryUnit{}};
  }
  return {q.w, y, ImaginaryUnit::normalized(q)};
}

std::array<double, 4> coordinate_extract(const Quaternion &q) {
  using basis::i;
  using basis::j;
  using basis::k;
  const Quaternion iqi = i * q * i;
  const Quaternion jqj = j * q * j;
  const Quaternion kqk = k * q * k;
  // 1/(4e) = -e/4 for e in {i, j, k}; each bracket is real times e.
  const Quaternion x0 = (q - iqi - jqj - kqk) / 4.0;
  const Quaternion x1 = (-i) * (q - iqi + jqj + kqk) / 4.0;
  const Quaternion x2 = (-j) * (q + iqi - jqj + kqk) / 4.0;
  const Quaternion x3 = (-k) * (q + iqi + jqj - kqk) / 4.0;
  return {x0.w, x1.w, x2.w, x3.w};
}

bool same_slice(const Quaternion &p, const Quaternion &q) {
  const double np = p.im_norm();
  const double nq = q.im_norm();
  if (np == 0.0 || nq == 0.0) {
    return true;
  }
  return cross3(p, q).norm() <= 1e-12 * np * nq;
}

double sigma_distance(const Quaternion &p, const Quaternion &q) {
  if (same_slice(p, q)) {
    return (q - p).norm();
  }
  const double dre = q.w - p.w;
  const double sim = q.im_norm() + p.im_norm();
  return std::sqrt(dre * dre + sim * sim);
}

SphereAffine sphere_affine(const Quaternion &q1, const Quaternion &f1,
                           const Quaternion &q2, const Quaternion &f2) {
  const Quaternion d = q2 - q1;
  if (d.norm() <= kZeroTol * (1.0 + q1.norm() + q2.norm())) {
    throw DegenerateSphere("representation needs two distinct points");
  }
  const Quaternion dinv = d.inverse();
  return {dinv * (q1.conj() * f1 - q2.conj() * f2), dinv * (f2 - f1)};
}

Quaternion representation_eval(const SphereSamples &values,
                               const Sphere &sphere, const Quaternion &q) {
  const double tol =
      kOnSphereTol * (1.0 + std::abs(sphere.x0()) + sphere.y0());
  for (const Quaternion &p : {values.q1, values.q2, q}) {
    if (!sphere.contains(p, tol)) {
      throw InvalidArgument("representation point is not on the sphere");
    }
  }
  return sphere_affine(values.q1, values.f1, values.q2, values.f2)(q);
}

} // namespace slicereg
