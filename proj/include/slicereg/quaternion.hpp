#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <iosfwd>

#include "slicereg/errors.hpp"

namespace slicereg {

/// Singularity guard: a quaternion counts as zero when |q| <= kZeroTol*(1+|q|).
inline constexpr double kZeroTol = 1e-14;
/// Tolerance for unit-length and in-plane checks.
inline constexpr double kUnitTol = 1e-12;

/**
 * Real quaternion w + x i + y j + z k.
 *
 * Plain aggregate with value semantics. The product follows
 * i^2 = j^2 = k^2 = -1, ij = -ji = k, jk = -kj = i, ki = -ik = j.
 */
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0,
                       double z_ = 0.0)
      : w(w_), x(x_), y(y_), z(z_) {}

  [[nodiscard]] constexpr double re() const { return w; }
  [[nodiscard]] constexpr Quaternion im() const { return {0.0, x, y, z}; }
  [[nodiscard]] constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  [[nodiscard]] constexpr double norm2() const {
    return w * w + x * x + y * y + z * z;
  }
  [[nodiscard]] double norm() const { return std::sqrt(norm2()); }
  [[nodiscard]] double im_norm() const {
    return std::sqrt(x * x + y * y + z * z);
  }
  [[nodiscard]] constexpr std::array<double, 4> components() const {
    return {w, x, y, z};
  }

  /// Multiplicative inverse conj(q)/|q|^2. Throws DivisionByZero near 0.
  [[nodiscard]] Quaternion inverse() const;

  constexpr Quaternion &operator+=(const Quaternion &o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Quaternion &operator-=(const Quaternion &o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Quaternion &operator*=(double s) {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion &, const Quaternion &) =
      default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion &b) {
  return a += b;
}
constexpr Quaternion operator-(Quaternion a, const Quaternion &b) {
  return a -= b;
}
constexpr Quaternion operator-(const Quaternion &a) {
  return {-a.w, -a.x, -a.y, -a.z};
}
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) {
  return a *= (1.0 / s);
}

constexpr Quaternion operator*(const Quaternion &a, const Quaternion &b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Quaternion mul(const Quaternion &a, const Quaternion &b) {
  return a * b;
}
inline Quaternion conj(const Quaternion &q) { return q.conj(); }
inline double modulus(const Quaternion &q) { return q.norm(); }
inline Quaternion inverse(const Quaternion &q) { return q.inverse(); }

std::ostream &operator<<(std::ostream &os, const Quaternion &q);

namespace basis {
inline constexpr Quaternion one{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion i{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion j{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion k{0.0, 0.0, 0.0, 1.0};
} // namespace basis

/// Element of the unit sphere of imaginary quaternions (u^2 = -1).
class ImaginaryUnit {
public:
  /// Defaults to i.
  constexpr ImaginaryUnit() : u_(basis::i) {}
  /// Throws InvalidArgument unless Re(u) = 0 and |u| = 1 within kUnitTol.
  explicit ImaginaryUnit(const Quaternion &u);
  /// Normalizes the imaginary part of `v`; throws InvalidArgument if it is 0.
  static ImaginaryUnit normalized(const Quaternion &v);

  [[nodiscard]] constexpr const Quaternion &value() const { return u_; }
  constexpr operator const Quaternion &() const { return u_; }
  [[nodiscard]] ImaginaryUnit operator-() const;

  /// Deterministic unit J orthogonal to this one: Gram-Schmidt of the first
  /// usable element of {j, k, i} against I.
  [[nodiscard]] ImaginaryUnit orthogonal() const;

  /// Embeds a + b*sqrt(-1) as a + b I in the plane L_I.
  [[nodiscard]] Quaternion embed(std::complex<double> c) const {
    return Quaternion{c.real()} + u_ * c.imag();
  }
  /// Coordinates of q along {1, I}, dropping any orthogonal part.
  [[nodiscard]] std::complex<double> project(const Quaternion &q) const;
  /// Norm of the part of q orthogonal to L_I.
  [[nodiscard]] double off_plane(const Quaternion &q) const;

private:
  struct Unchecked {};
  constexpr ImaginaryUnit(const Quaternion &u, Unchecked) : u_(u) {}
  Quaternion u_;
};

/// The 2-sphere x0 + y0 S; y0 = 0 is the degenerate sphere {x0}.
class Sphere {
public:
  constexpr Sphere() = default;
  /// Throws InvalidArgument if y0 < 0 or either value is not finite.
  Sphere(double x0, double y0);
  /// The sphere through q: (Re q, |Im q|).
  static Sphere through(const Quaternion &q);

  [[nodiscard]] constexpr double x0() const { return x0_; }
  [[nodiscard]] constexpr double y0() const { return y0_; }
  [[nodiscard]] constexpr bool degenerate() const { return y0_ == 0.0; }
  /// x0 + I y0.
  [[nodiscard]] Quaternion point(const ImaginaryUnit &I) const {
    return Quaternion{x0_} + I.value() * y0_;
  }
  /// (q - x0)^2 + y0^2, the real quadratic vanishing on the sphere.
  [[nodiscard]] Quaternion characteristic(const Quaternion &q) const;
  /// Distance-like test: |Re q - x0| and ||Im q| - y0| both within tol.
  [[nodiscard]] bool contains(const Quaternion &q, double tol) const;

private:
  double x0_ = 0.0;
  double y0_ = 0.0;
};

struct SliceCoordinates {
  double x;
  double y;
  ImaginaryUnit I;
};

/// q = x + I y with y = |Im q| >= 0. Real points get I = i.
SliceCoordinates slice_decompose(const Quaternion &q);

/// Real coordinates recovered through the conjugation identities
/// x0 = (q - iqi - jqj - kqk)/4 and its three companions.
std::array<double, 4> coordinate_extract(const Quaternion &q);

/// True when p and q lie on a common plane L_I.
bool same_slice(const Quaternion &p, const Quaternion &q);

/// sigma(p, q): |p - q| on a common slice, otherwise
/// sqrt((Re q - Re p)^2 + (|Im q| + |Im p|)^2).
double sigma_distance(const Quaternion &p, const Quaternion &q);

/// Value of a slice regular function on a sphere, f(q) = b + q c.
struct SphereAffine {
  Quaternion b;
  Quaternion c;
  [[nodiscard]] Quaternion operator()(const Quaternion &q) const {
    return b + q * c;
  }
};

/// Affine data (b, c) from two samples on one sphere:
///   c = (q2 - q1)^-1 [f2 - f1],  b = (q2 - q1)^-1 [conj(q1) f1 - conj(q2) f2].
/// Throws DegenerateSphere when q1 and q2 coincide.
SphereAffine sphere_affine(const Quaternion &q1, const Quaternion &f1,
                           const Quaternion &q2, const Quaternion &f2);

struct SphereSamples {
  Quaternion q1;
  Quaternion f1;
  Quaternion q2;
  Quaternion f2;
};

/// Representation Formula: value at q from the samples (q1,f1), (q2,f2).
/// Throws InvalidArgument if a point is off `sphere`, DegenerateSphere if
/// q1 = q2.
Quaternion representation_eval(const SphereSamples &values,
                               const Sphere &sphere, const Quaternion &q);

} // namespace slicereg
