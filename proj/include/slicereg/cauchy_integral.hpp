#pragma once

#include <functional>
#include <vector>

#include "slicereg/slice_poly.hpp"
#include "slicereg/spherical_series.hpp"

namespace slicereg {

struct ContourNode {
  Quaternion point;  ///< s_m in L_I
  Quaternion weight; ///< ds at s_m: s'(t_m) * dt, also in L_I
};

/// Discretized closed curve in one slice plane, ready for periodic
/// trapezoidal quadrature.
struct Contour {
  ImaginaryUnit I;
  std::vector<ContourNode> nodes;
  double total_length = 0.0; ///< sum of |weights|
};

/// center + radius e^{I theta} on M equispaced angles. Requires radius > 0
/// and M >= 16.
Contour make_circle(double center, double radius, const ImaginaryUnit &I,
                    std::size_t M);

/// Boundary of U intersected with L_I, sampled by lemniscate_boundary.
/// Weights use the exact tangent I R^2 e^{I theta} / (2 (z - x0)).
/// Throws PinchedContour when R = y0 within the boundary tolerance.
Contour make_lemniscate_contour(const USet &U, const ImaginaryUnit &I,
                                std::size_t M);

using SliceKernel = std::function<Quaternion(const Quaternion &)>;

/// Quadrature of  int k(s) ds f(s)  with f = F + G J split over L_I:
///   int k ds F + (int k ds G) J.
/// Kernel values must lie in L_I (KernelOffSlice otherwise).
Quaternion slice_integral(const SliceKernel &kernel, const SlicePoly &f,
                          const Contour &c);

/// (1 / 2 pi I) int ds / (s - z) f(s), approximating f(z) for z inside.
/// Throws PointOnContour if z sits on a node, KernelOffSlice if z is not in
/// the contour's plane.
Quaternion cauchy_eval(const SlicePoly &f, const Quaternion &z,
                       const Contour &c);

enum class Parity { even, odd };

/// Expansion coefficient at q0 through the integral representations:
///   even: (1/2 pi I) int ds / ((s - q0) Q(s)^n) f(s)          = A_{2n}
///   odd:  (1/2 pi I) int ds / ((s - conj q0)(s - q0) Q(s)^n) f(s) = A_{2n+1}
/// with Q(s) = (s - x0)^2 + y0^2.
Quaternion coeff_via_integral(const SlicePoly &f, const Quaternion &q0,
                              std::size_t n, Parity parity, const Contour &c);

struct EstimateRow {
  std::size_t n;
  double algebraic;  ///< |A_n| from expand_A
  double integral;   ///< |A_n| from coeff_via_integral on the boundary of U_I
  double bound;      ///< C max|f| / R^n
  double margin;     ///< bound - algebraic
};

struct EstimateReport {
  double constant;   ///< length / (2 pi (sqrt(R^2+y0^2) - y0))
  double max_abs_f;  ///< sampled maximum over the boundary of U_I
  double boundary_length;
  std::vector<EstimateRow> rows;
  [[nodiscard]] double min_margin() const;
};

/// Checks |A_n| <= C max|f| / R^n for n = 0..N at q0 = x0 + I y0.
/// `quad_nodes` sets the quadrature used for the integral column; the
/// maximum and the length always use 4096 boundary samples.
EstimateReport cauchy_estimate_check(const SlicePoly &f, const USet &U,
                                     const ImaginaryUnit &I, std::size_t N,
                                     std::size_t quad_nodes = 1024);

} // namespace slicereg
