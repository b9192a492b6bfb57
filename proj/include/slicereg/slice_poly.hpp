#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "slicereg/quaternion.hpp"

namespace slicereg {

/// Relative threshold for trimming trailing coefficients:
/// |a_d| <= kCoeffTol * (1 + max |a_n|) counts as zero.
inline constexpr double kCoeffTol = 1e-12;

/**
 * Polynomial (or truncated power series) sum_n q^n a_n with quaternionic
 * coefficients on the right, stored densely with a_0 first.
 *
 * The coefficient list is always trimmed, so the zero polynomial has no
 * coefficients and degree() == -1 (standing in for -infinity).
 */
class SlicePoly {
public:
  SlicePoly() = default;
  explicit SlicePoly(std::vector<Quaternion> coeffs,
                     double trim_tol = kCoeffTol);
  SlicePoly(std::initializer_list<Quaternion> coeffs)
      : SlicePoly(std::vector<Quaternion>(coeffs)) {}

  static SlicePoly constant(const Quaternion &c) { return SlicePoly({c}); }
  /// The linear polynomial q - q0, i.e. coefficients [-q0, 1].
  static SlicePoly linear(const Quaternion &q0) {
    return SlicePoly({-q0, basis::one});
  }
  /// (q - x0)^2 + y0^2 = q^2 - 2 x0 q + x0^2 + y0^2.
  static SlicePoly characteristic(const Sphere &s);

  [[nodiscard]] std::span<const Quaternion> coeffs() const { return coeffs_; }
  [[nodiscard]] std::ptrdiff_t degree() const {
    return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
  }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// a_n, or zero past the degree.
  [[nodiscard]] Quaternion operator[](std::size_t n) const {
    return n < coeffs_.size() ? coeffs_[n] : Quaternion{};
  }
  [[nodiscard]] double max_coeff_norm() const;
  [[nodiscard]] bool has_real_coeffs() const;

  /// Left Horner evaluation a_0 + q(a_1 + q(a_2 + ...)).
  [[nodiscard]] Quaternion operator()(const Quaternion &q) const;

  friend bool operator==(const SlicePoly &, const SlicePoly &) = default;

private:
  std::vector<Quaternion> coeffs_;
};

SlicePoly add(const SlicePoly &f, const SlicePoly &g);
SlicePoly sub(const SlicePoly &f, const SlicePoly &g);
/// Right scaling: coefficients a_n c.
SlicePoly scale(const SlicePoly &f, const Quaternion &c);
/// Convolution product: c_n = sum_{k<=n} a_k b_{n-k}.
SlicePoly star_mul(const SlicePoly &f, const SlicePoly &g);
/// n-fold star power; star_pow(f, 0) is the constant 1.
SlicePoly star_pow(const SlicePoly &f, unsigned n);

inline SlicePoly operator+(const SlicePoly &f, const SlicePoly &g) {
  return add(f, g);
}
inline SlicePoly operator-(const SlicePoly &f, const SlicePoly &g) {
  return sub(f, g);
}
inline SlicePoly operator*(const SlicePoly &f, const SlicePoly &g) {
  return star_mul(f, g);
}

Quaternion eval_left(const SlicePoly &f, const Quaternion &q);

struct RemainderDivision {
  Quaternion value;  ///< f(q0)
  SlicePoly quotient; ///< R_{q0} f
};

/// f = f(q0) + (q - q0) * R_{q0}f, by the backward recursion
/// g_{d-1} = a_d, g_{n-1} = a_n + q0 g_n.
RemainderDivision remainder_div(const SlicePoly &f, const Quaternion &q0);

struct QuadraticDivision {
  SlicePoly quotient;
  SlicePoly remainder; ///< degree <= 1
};

/// Long division by the real quadratic (q - x0)^2 + y0^2.
QuadraticDivision quadratic_div(const SlicePoly &f, const Sphere &s);

/// Largest coefficient-wise distance max_n |f_n - g_n|.
double coeff_distance(const SlicePoly &f, const SlicePoly &g);

} // namespace slicereg
