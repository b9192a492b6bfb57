#pragma once

#include <optional>
#include <span>
#include <vector>

#include "slicereg/slice_poly.hpp"

namespace slicereg {

/**
 * Expansion of a slice regular function about the sphere x0 + y0 S:
 *
 *   f(q) = sum_n [(q-x0)^2 + y0^2]^n [A_{2n} + (q - q0) A_{2n+1}]
 *        = sum_n [(q-x0)^2 + y0^2]^n [C_{2n} + q C_{2n+1}]
 *
 * with q0 a point of the sphere. Either coefficient family may be empty.
 */
struct SphericalExpansion {
  Sphere sphere;
  Quaternion q0;
  std::vector<Quaternion> A;
  std::optional<std::vector<Quaternion>> C;
};

/// A_0..A_N by alternating remainder division at q0 and conj(q0).
SphericalExpansion expand_A(const SlicePoly &f, const Quaternion &q0,
                            std::size_t N);

/// C_0..C_N from the Representation Formula applied to the iterated
/// quadratic quotients (R_{conj q0} R_{q0})^n f sampled at q1 and q2.
/// Throws DegenerateSphere if q1 = q2, InvalidArgument if off the sphere.
SphericalExpansion expand_C(const SlicePoly &f, const Sphere &sphere,
                            const Quaternion &q1, const Quaternion &q2,
                            std::size_t N);

/// C_0..C_N read directly off the degree-one remainders of repeated
/// quadratic_div. Works on degenerate spheres as well.
std::vector<Quaternion> c_coefficients_by_division(const SlicePoly &f,
                                                   const Sphere &sphere,
                                                   std::size_t N);

enum class ExpansionForm { A, C };

/// Partial sum over n = 0..up_to. Coefficients past the stored list count
/// as zero; throws InvalidArgument if 2*up_to exceeds the last stored index.
Quaternion eval_expansion(const SphericalExpansion &e, const Quaternion &q,
                          std::size_t up_to, ExpansionForm form = ExpansionForm::A);
/// Sum of every stored term.
Quaternion eval_expansion(const SphericalExpansion &e, const Quaternion &q,
                          ExpansionForm form = ExpansionForm::A);

/// Partial sum as a polynomial (only meaningful for the A or C form built
/// from polynomial data): sum_{n<=up_to} Q^n [A_{2n} + (q - q0) A_{2n+1}].
SlicePoly expansion_partial_poly(const SphericalExpansion &e, std::size_t up_to,
                                 ExpansionForm form = ExpansionForm::A);

/// P_n(q): [(q-x0)^2+y0^2]^m for n = 2m, times (q - q0) for n = 2m + 1.
Quaternion expansion_basis(const Sphere &s, const Quaternion &q0,
                           const Quaternion &q, std::size_t n);

enum class SeriesKind { polynomial, truncated };

/// 1 / limsup |a_n|^{1/n}. Polynomials have infinite radius. For truncated
/// series the limsup is estimated as the max of |a_n|^{1/n} over the upper
/// half of the indices with a_n != 0; returns +inf if there are none.
double radius_of_convergence(std::span<const Quaternion> coeffs,
                             SeriesKind kind = SeriesKind::truncated);

/// U(x0 + y0 S, R) = { q : |(q-x0)^2 + y0^2| < R^2 }.
class USet {
public:
  /// Throws InvalidArgument unless R > 0 and y0 >= 0. `boundary_rel` scales
  /// the boundary tolerance boundary_rel * (1 + R^2).
  USet(double x0, double y0, double R, double boundary_rel = 1e-9);
  USet(const Sphere &s, double R, double boundary_rel = 1e-9)
      : USet(s.x0(), s.y0(), R, boundary_rel) {}

  [[nodiscard]] const Sphere &sphere() const { return sphere_; }
  [[nodiscard]] double x0() const { return sphere_.x0(); }
  [[nodiscard]] double y0() const { return sphere_.y0(); }
  [[nodiscard]] double R() const { return R_; }
  [[nodiscard]] double boundary_tol() const {
    return boundary_rel_ * (1.0 + R_ * R_);
  }

private:
  Sphere sphere_;
  double R_;
  double boundary_rel_;
};

enum class Membership { inside, boundary, outside };

Membership u_membership(const Quaternion &q, const USet &U);
Membership u_membership(const Quaternion &q, const USet &U, double tol);

enum class Topology { two_components, figure_eight, connected };

struct TopologyInfo {
  Topology kind;
  bool symmetric_slice_domain; ///< R > y0
};

TopologyInfo u_topology(const USet &U);
TopologyInfo u_topology(const USet &U, double tol);

struct LemniscatePoint {
  double theta;
  Quaternion z;
  int loop;
};

/**
 * M points of { z in L_I : |(z-x0)^2 + y0^2| = R^2 }, from
 * z = x0 + sqrt(R^2 e^{I theta} - y0^2) with theta in [0, 2pi) on M/2
 * equispaced values. The square root starts on the principal branch at
 * theta = 0 and is continued along theta; the second half of the output is
 * the opposite branch. Loops are traversed counter-clockwise in L_I.
 *
 * R > y0: one loop (index 0) made of both halves in order.
 * R <= y0: two loops (indices 0 and 1), one per branch; at R = y0 both
 * start at the pinch point x0.
 *
 * Requires M >= 8 and even; throws InvalidArgument otherwise.
 */
std::vector<LemniscatePoint> lemniscate_boundary(const USet &U,
                                                 const ImaginaryUnit &I,
                                                 std::size_t M);

struct ModulusBounds {
  double lower;
  double upper;
};

/// With r^2 = |(q-x0)^2 + y0^2|: (sqrt(r^2+y0^2) - y0, sqrt(r^2+y0^2) + y0).
ModulusBounds modulus_bounds(const Quaternion &q, const Sphere &sphere);

} // namespace slicereg
