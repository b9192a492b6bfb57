#include "slicereg/cauchy_integral.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <span>

namespace slicereg {

namespace {

using cplx = std::complex<double>;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class T> T pairwise_sum(std::span<const T> v) {
  if (v.size() <= 8) {
    T s{};
    for (const auto &x : v) {
      s += x;
    }
    return s;
  }
  const auto mid = v.size() / 2;
  return pairwise_sum<T>(v.first(mid)) + pairwise_sum<T>(v.subspan(mid));
}

// int k(s) ds f(s) with a kernel already expressed in the coordinates of L_I.
template <class Kernel>
Quaternion integrate(const Kernel &kernel, const SlicePoly &f,
                     const Contour &c) {
  const ImaginaryUnit J = c.I.orthogonal();
  const Quaternion K = c.I.value() * J.value();
  std::vector<cplx> fpart;
  std::vector<cplx> gpart;
  fpart.reserve(c.nodes.size());
  gpart.reserve(c.nodes.size());
  for (const auto &node : c.nodes) {
    const cplx s = c.I.project(node.point);
    const cplx hw = kernel(s) * c.I.project(node.weight);
    const Quaternion v = f(node.point);
    // v = F + G J with F = a + b I, G = c + d I.
    const cplx F = c.I.project(v);
    const cplx G{v.x * J.value().x + v.y * J.value().y + v.z * J.value().z,
                 v.x * K.x + v.y * K.y + v.z * K.z};
    fpart.push_back(hw * F);
    gpart.push_back(hw * G);
  }
  return c.I.embed(pairwise_sum<cplx>(fpart)) +
         c.I.embed(pairwise_sum<cplx>(gpart)) * J.value();
}

cplx in_plane(const Quaternion &q, const ImaginaryUnit &I) {
  if (I.off_plane(q) > kUnitTol * (1.0 + q.norm())) {
    throw KernelOffSlice("point does not lie in the contour plane");
  }
  return I.project(q);
}

void require_off_contour(cplx z, const Contour &c) {
  const double tol = 1e-9 * (1.0 + std::abs(z));
  for (const auto &node : c.nodes) {
    if (std::abs(c.I.project(node.point) - z) <= tol) {
      throw PointOnContour("evaluation point lies on the contour");
    }
  }
}

// Left factor 1/(2 pi I) = -I / (2 pi).
Quaternion over_two_pi_I(const Quaternion &v, const ImaginaryUnit &I) {
  return I.embed(cplx{0.0, -1.0 / kTwoPi}) * v;
}

double total_length(const std::vector<ContourNode> &nodes) {
  std::vector<double> lengths;
  lengths.reserve(nodes.size());
  for (const auto &n : nodes) {
    lengths.push_back(n.weight.norm());
  }
  return pairwise_sum<double>(lengths);
}

} // namespace

Contour make_circle(double center, double radius, const ImaginaryUnit &I,
                    std::size_t M) {
  if (!(radius > 0.0) || M < 16) {
    throw InvalidArgument("circle contour needs radius > 0 and M >= 16");
  }
  Contour c{I, {}, 0.0};
  c.nodes.reserve(M);
  const double dt = kTwoPi / static_cast<double>(M);
  for (std::size_t m = 0; m < M; ++m) {
    const cplx e = std::polar(1.0, dt * static_cast<double>(m));
    c.nodes.push_back({I.embed(center + radius * e),
                       I.embed(cplx{0.0, 1.0} * radius * e * dt)});
  }
  c.total_length = total_length(c.nodes);
  return c;
}

Contour make_lemniscate_contour(const USet &U, const ImaginaryUnit &I,
                                std::size_t M) {
  if (u_topology(U).kind == Topology::figure_eight) {
    throw PinchedContour("lemniscate contour is pinched at R = y0");
  }
  const auto points = lemniscate_boundary(U, I, M);
  const double dt = kTwoPi / static_cast<double>(M / 2);
  const double R2 = U.R() * U.R();
  Contour c{I, {}, 0.0};
  c.nodes.reserve(points.size());
  for (const auto &p : points) {
    const cplx s = I.project(p.z) - U.x0();
    const cplx ds = cplx{0.0, 1.0} * R2 * std::polar(1.0, p.theta) / (2.0 * s);
    c.nodes.push_back({p.z, I.embed(ds * dt)});
  }
  c.total_length = total_length(c.nodes);
  return c;
}

Quaternion slice_integral(const SliceKernel &kernel, const SlicePoly &f,
                          const Contour &c) {
  return integrate(
      [&](cplx s) {
        const Quaternion k = kernel(c.I.embed(s));
        if (c.I.off_plane(k) > kUnitTol * (1.0 + k.norm())) {
          throw KernelOffSlice("kernel value leaves the contour plane");
        }
        return c.I.project(k);
      },
      f, c);
}

Quaternion cauchy_eval(const SlicePoly &f, const Quaternion &z,
                       const Contour &c) {
  const cplx zc = in_plane(z, c.I);
  require_off_contour(zc, c);
  const Quaternion integral =
      integrate([zc](cplx s) { return 1.0 / (s - zc); }, f, c);
  return over_two_pi_I(integral, c.I);
}

Quaternion coeff_via_integral(const SlicePoly &f, const Quaternion &q0,
                              std::size_t n, Parity parity, const Contour &c) {
  const cplx z0 = in_plane(q0, c.I);
  const cplx z0bar = std::conj(z0);
  require_off_contour(z0, c);
  require_off_contour(z0bar, c);
  const double x0 = z0.real();
  const double y02 = z0.imag() * z0.imag();
  const int power = static_cast<int>(n);
  Quaternion integral;
  if (parity == Parity::even) {
    integral = integrate(
        [&](cplx s) {
          const cplx Q = (s - x0) * (s - x0) + y02;
          return 1.0 / ((s - z0) * std::pow(Q, power));
        },
        f, c);
  } else {
    integral = integrate(
        [&](cplx s) {
          const cplx Q = (s - x0) * (s - x0) + y02;
          return 1.0 / ((s - z0bar) * (s - z0) * std::pow(Q, power));
        },
        f, c);
  }
  return over_two_pi_I(integral, c.I);
}

double EstimateReport::min_margin() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto &r : rows) {
    m = std::min(m, r.margin);
  }
  return m;
}

EstimateReport cauchy_estimate_check(const SlicePoly &f, const USet &U,
                                     const ImaginaryUnit &I, std::size_t N,
                                     std::size_t quad_nodes) {
  constexpr std::size_t kBoundarySamples = 4096;
  const Contour dense = make_lemniscate_contour(U, I, kBoundarySamples);
  double max_f = 0.0;
  for (const auto &node : dense.nodes) {
    max_f = std::max(max_f, f(node.point).norm());
  }
  const double R = U.R();
  const double y0 = U.y0();
  const double gap = std::sqrt(R * R + y0 * y0) - y0;

  EstimateReport report;
  report.boundary_length = dense.total_length;
  report.max_abs_f = max_f;
  report.constant = dense.total_length / (kTwoPi * gap);

  const Quaternion q0 = U.sphere().point(I);
  const auto expansion = expand_A(f, q0, N);
  const Contour quad = make_lemniscate_contour(U, I, quad_nodes);
  report.rows.reserve(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    const double algebraic = expansion.A[n].norm();
    const double integral =
        coeff_via_integral(f, q0, n / 2,
                           n % 2 == 0 ? Parity::even : Parity::odd, quad)
            .norm();
    const double bound =
        report.constant * max_f / std::pow(R, static_cast<double>(n));
    report.rows.push_back({n, algebraic, integral, bound, bound - algebraic});
  }
  return report;
}

} // namespace slicereg
