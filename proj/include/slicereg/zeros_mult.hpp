#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "slicereg/slice_poly.hpp"

namespace slicereg {

/// Shared zero threshold for multiplicity computations: a value or
/// coefficient counts as zero when its modulus is at most
/// rel * (1 + max |coefficients of f|).
struct ZeroTolerance {
  double rel = 1e-10;
  [[nodiscard]] double threshold(const SlicePoly &f) const {
    return rel * (1.0 + f.max_coeff_norm());
  }
};

/// Largest n with f = (q - q0)^{*n} * g. Throws ZeroFunction for f = 0.
int classical_multiplicity(const SlicePoly &f, const Quaternion &q0,
                           ZeroTolerance tol = {});

struct SphericalFactor {
  int multiplicity; ///< 2m
  SlicePoly cofactor;
};

/// Maximal m with [(q-x0)^2 + y0^2]^m dividing f.
SphericalFactor spherical_multiplicity(const SlicePoly &f, const Sphere &s,
                                       ZeroTolerance tol = {});

struct NoZero {};
struct WholeSphere {};
using SphereZero = std::variant<NoZero, Quaternion, WholeSphere>;

/// Zeros of f on the sphere, read off the restriction f(q) = b + q c.
SphereZero sphere_zero(const SlicePoly &f, const Sphere &s,
                       ZeroTolerance tol = {});

struct IsolatedFactor {
  std::optional<Quaternion> point; ///< p1
  int multiplicity = 0;            ///< n
  std::vector<Quaternion> factors; ///< p1..pn
  SlicePoly residual;              ///< g, zero-free on the sphere
};

/// Peels (q - p1) * ... * (q - pn) off a function that does not vanish on
/// the whole sphere. Throws InvalidArgument if it does.
IsolatedFactor isolated_multiplicity(const SlicePoly &tilde_f, const Sphere &s,
                                     ZeroTolerance tol = {});

struct MultiplicityReport {
  Sphere sphere;
  int spherical_mult = 0;
  std::optional<Quaternion> isolated_point;
  int isolated_mult = 0;
  std::vector<Quaternion> factors;
  SlicePoly residual;
};

/// Full factorization f = Q^m (q - p1) * ... * (q - pn) * g on one sphere.
MultiplicityReport multiplicity_report(const SlicePoly &f, const Sphere &s,
                                       ZeroTolerance tol = {});

/// Multiplicity data read from the C-form expansion.
struct ExpansionMultiplicity {
  int spherical = 0;
  bool has_isolated = false;  ///< from sphere_zero on the cofactor
  bool criterion = false;     ///< C_{2n+1}^{-1} C_{2n} on the sphere
  std::optional<Quaternion> direct_zero; ///< -C_{2n} C_{2n+1}^{-1} if on it
  [[nodiscard]] bool discrepancy() const { return criterion != has_isolated; }
};

ExpansionMultiplicity expansion_multiplicity(const SlicePoly &f,
                                             const Sphere &s,
                                             ZeroTolerance tol = {});

/// Multiplicity data read from the A-form expansion at a point of the
/// sphere: spherical multiplicity 2n from the first nonvanishing A_k, and
/// whether q0 itself has positive isolated multiplicity (A_{2n} = 0).
struct PointExpansionMultiplicity {
  int spherical = 0;
  bool point_is_isolated_zero = false;
};

PointExpansionMultiplicity point_expansion_multiplicity(const SlicePoly &f,
                                                        const Quaternion &q0,
                                                        ZeroTolerance tol = {});

} // namespace slicereg
