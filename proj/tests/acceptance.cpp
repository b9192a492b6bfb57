// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "slicereg/cauchy_integral.hpp"
#include "slicereg/reg_calculus.hpp"
#include "slicereg/spherical_series.hpp"
#include "slicereg/zeros_mult.hpp"

using namespace slicereg;
using Clock = std::chrono::steady_clock;

namespace {

const Quaternion one = basis::one;
const Quaternion i = basis::i;
const Quaternion j = basis::j;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char *format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double scale_of(const std::vector<Quaternion> &v) {
  double s = 1.0;
  for (const auto &q : v) {
    s = std::max(s, q.norm());
  }
  return s;
}

Outcome expansion_exactness() {
  const auto start = Clock::now();
  oracle::Gen gen(1001);
  double worst = 0.0;
  int cases = 0;
  for (int t = 0; t < 50; ++t) {
    const int d = gen.integer(0, 10);
    const SlicePoly f = gen.poly(d, 10.0);
    const Sphere s(gen.uniform(-2, 2), gen.uniform(0, 2));
    const auto e = expand_A(f, s.point(gen.unit_imag()), static_cast<std::size_t>(d) + 1);
    for (int p = 0; p < 20; ++p) {
      const Quaternion q = gen.quat_in_ball(2.0);
      const Quaternion want = eval_left(f, q);
      worst = std::max(worst, (eval_expansion(e, q) - want).norm() / (1.0 + want.norm()));
      ++cases;
    }
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-9 && elapsed < 2.0,
          fmt("%d evaluations, max err/(1+|f|) = %.2e (<= 1e-9), %.3f s (< 2 s)", cases,
              worst, elapsed)};
}

Outcome golden_values() {
  const Sphere S(0.0, 1.0);
  const SlicePoly q2_plus_1({one, Quaternion{}, one});
  const SlicePoly P = SlicePoly::linear(i) * SlicePoly::linear(j);
  std::vector<std::string> failed;
  const auto expect = [&](bool ok, const char *what) {
    if (!ok) {
      failed.emplace_back(what);
    }
  };
  expect(SlicePoly::linear(i) * SlicePoly::linear(-i) == q2_plus_1, "(q-i)*(q+i)");
  expect(classical_multiplicity(q2_plus_1, i) == 1, "m(q^2+1, i)");
  expect(spherical_multiplicity(q2_plus_1, S).multiplicity == 2, "spherical(q^2+1)");
  const auto zero = sphere_zero(P, S);
  expect(std::holds_alternative<Quaternion>(zero) && std::get<Quaternion>(zero) == i,
         "zero set of P");
  const auto report = multiplicity_report(P, S);
  expect(report.spherical_mult == 0, "spherical(P)");
  expect(report.isolated_mult == 2, "isolated(P)");
  expect(report.isolated_point && *report.isolated_point == i, "isolated point");
  expect(P.degree() == report.spherical_mult + report.isolated_mult + report.residual.degree(),
         "degree sum");
  std::string detail = "8 golden checks exact";
  for (const auto &f : failed) {
    detail += "; mismatch: " + f;
  }
  return {failed.empty(), detail};
}

Quaternion integral_coefficient(const SlicePoly &f, const Quaternion &q0, std::size_t k,
                                const Contour &c) {
  return coeff_via_integral(f, q0, k / 2, k % 2 == 0 ? Parity::even : Parity::odd, c);
}

Outcome integral_agreement() {
  oracle::Gen gen(1003);
  double worst = 0.0;
  bool ratios_ok = true;
  double min_ratio = std::numeric_limits<double>::infinity();
  for (int t = 0; t < 20; ++t) {
    const int d = gen.integer(0, 8);
    const SlicePoly f = gen.poly(d, 10.0);
    const Sphere s(gen.uniform(-1, 1), gen.uniform(0.1, 1.5));
    const ImaginaryUnit I = gen.unit_imag();
    const Quaternion q0 = s.point(I);
    const auto A = expand_A(f, q0, static_cast<std::size_t>(d)).A;

    const Contour c256 = make_circle(s.x0(), s.y0() + 1.0, I, 256);
    // A circle close to the sphere keeps the M = 64 error above round-off.
    const Contour c64 = make_circle(s.x0(), 1.2 * s.y0(), I, 64);
    const Contour c128 = make_circle(s.x0(), 1.2 * s.y0(), I, 128);
    double e64 = 0.0, e128 = 0.0;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(d); ++k) {
      const double denom = 1.0 + A[k].norm();
      worst = std::max(worst, (integral_coefficient(f, q0, k, c256) - A[k]).norm() / denom);
      e64 = std::max(e64, (integral_coefficient(f, q0, k, c64) - A[k]).norm() / denom);
      e128 = std::max(e128, (integral_coefficient(f, q0, k, c128) - A[k]).norm() / denom);
    }
    if (e128 > std::max(e64 / 10.0, 1e-12)) {
      ratios_ok = false;
    }
    if (e128 > 0.0) {
      min_ratio = std::min(min_ratio, e64 / e128);
    }
  }
  return {worst <= 1e-8 && ratios_ok,
          fmt("20 polynomials, M=256 max rel err = %.2e (<= 1e-8); M=64 -> 128 error "
              "ratio >= %.1f (>= 10 or 1e-12 floor)",
              worst, min_ratio)};
}

Outcome cauchy_estimates() {
  oracle::Gen gen(1004);
  double worst = std::numeric_limits<double>::infinity();
  int rows = 0;
  for (const double R : {0.5, 1.5, 3.0}) {
    for (int t = 0; t < 20; ++t) {
      const SlicePoly f = gen.poly(gen.integer(0, 8), 10.0);
      const auto report = cauchy_estimate_check(f, USet(0.0, 1.0, R), gen.unit_imag(), 10);
      worst = std::min(worst, report.min_margin());
      rows += static_cast<int>(report.rows.size());
    }
  }
  return {worst >= -1e-6,
          fmt("60 polynomials on U(S, {0.5, 1.5, 3}), %d rows, min margin = %.3e (>= -1e-6)",
              rows, worst)};
}

Outcome derivatives() {
  oracle::Gen gen(1005);
  double fd = 0.0, in_slice = 0.0, tangent = 0.0;
  for (int t = 0; t < 200; ++t) {
    const SlicePoly f = gen.poly(gen.integer(0, 6), 10.0);
    const Quaternion q0 = gen.quat_in_ball(1.5);
    const Quaternion v = gen.unit4();
    fd = std::max(fd, (directional_derivative(f, q0, v) -
                       oracle::central_difference(f, q0, v, 1e-5)).norm());

    const ImaginaryUnit I = slice_decompose(q0).I;
    const SlicePoly R = remainder_div(f, q0).quotient;
    const Quaternion w = I.embed(std::polar(1.0, gen.uniform(0, 6.283)));
    in_slice = std::max(in_slice, (directional_derivative(f, q0, w) - w * R(q0)).norm());
    const ImaginaryUnit J = I.orthogonal();
    const double phi = gen.uniform(0, 6.283);
    const Quaternion u = J.value() * std::cos(phi) + (I.value() * J.value()) * std::sin(phi);
    tangent = std::max(tangent, (directional_derivative(f, q0, u) - u * R(q0.conj())).norm());
  }
  return {fd <= 1e-7 && in_slice <= 1e-10 && tangent <= 1e-10,
          fmt("200 triples, |D_v f - FD| = %.2e (<= 1e-7); in-slice %.2e, tangent %.2e "
              "(<= 1e-10)",
              fd, in_slice, tangent)};
}

double matrix_diff(const Matrix2c &a, const Matrix2c &b) {
  Matrix2c d;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      d[r][c] = a[r][c] - b[r][c];
    }
  }
  return max_abs(d);
}

Outcome complex_jacobian_check() {
  oracle::Gen gen(1006);
  double anti = 0.0, holo = 0.0;
  for (int t = 0; t < 50; ++t) {
    const SlicePoly f = gen.poly(gen.integer(0, 6), 10.0);
    const auto jac = complex_jacobian(f, gen.quat_in_ball(1.5));
    anti = std::max(anti, max_abs(jac.antiholo));
    holo = std::max(holo, matrix_diff(jac.holo, jac.holo_fd));
  }
  const auto sq = complex_jacobian(SlicePoly({Quaternion{}, Quaternion{}, one}), i);
  const Matrix2c want{{{std::complex<double>{0, 2}, 0.0}, {0.0, 0.0}}};
  const double hand = matrix_diff(sq.holo, want);
  return {anti <= 1e-7 && holo <= 1e-7 && hand <= 1e-10,
          fmt("50 polynomials, antiholo max %.2e, |closed form - FD| %.2e (<= 1e-7); q^2 at "
              "i off by %.1e (<= 1e-10)",
              anti, holo, hand)};
}

Outcome convergence_dichotomy() {
  oracle::Gen gen(1007);
  const double R = 1.0;
  bool ok = true;
  int inside_n = 0, outside_n = 0;
  for (int t = 0; t < 20; ++t) {
    const Sphere s(gen.uniform(-2, 2), gen.uniform(0, 2));
    const Quaternion q0 = s.point(gen.unit_imag());
    const Quaternion u = gen.unit4();
    for (const double ratio : {0.5, 1.5}) {
      const ImaginaryUnit I = gen.unit_imag();
      const std::complex<double> w =
          std::sqrt(std::polar(ratio * ratio * R * R, gen.uniform(0, 6.283)) - s.y0() * s.y0());
      const Quaternion q = Quaternion{s.x0()} + I.embed(w);
      int hit = -1;
      for (int n = 0; n <= 200 && hit < 0; ++n) {
        const Quaternion a = u * std::pow(R, -n);
        const double term = (expansion_basis(s, q0, q, static_cast<std::size_t>(n)) * a).norm();
        if (ratio < 1.0 ? term < 1e-8 : term > 1e6) {
          hit = n;
        }
      }
      if (ratio < 1.0) {
        // Stays below once reached: the tail is geometric.
        const double tail =
            (expansion_basis(s, q0, q, 200) * (u * std::pow(R, -200))).norm();
        ok = ok && hit >= 0 && tail < 1e-8;
        inside_n = std::max(inside_n, hit);
      } else {
        ok = ok && hit >= 0;
        outside_n = std::max(outside_n, hit);
      }
    }
  }
  return {ok, fmt("20 spheres, R = 1: interior terms < 1e-8 by n = %d, exterior terms > 1e6 "
                  "by n = %d (both <= 200)",
                  inside_n, outside_n)};
}

Outcome identity_suite() {
  const auto start = Clock::now();
  oracle::Gen gen(1008);
  int failures = 0;
  int cases = 0;
  for (int t = 0; t < 200; ++t, cases += 5) {
    // *-associativity.
    const SlicePoly f = gen.poly(gen.integer(0, 6), 5.0);
    const SlicePoly g = gen.poly(gen.integer(0, 6), 5.0);
    const SlicePoly h = gen.poly(gen.integer(0, 6), 5.0);
    const SlicePoly left = (f * g) * h;
    const SlicePoly right = f * (g * h);
    failures += coeff_distance(left, right) > 1e-12 * (1.0 + left.max_coeff_norm());

    // Remainder reconstruction.
    const SlicePoly p = gen.poly(gen.integer(0, 10), 10.0);
    const Quaternion q0 = gen.quat_in_ball(2.0);
    const auto [value, Rq] = remainder_div(p, q0);
    const SlicePoly rebuilt = SlicePoly::constant(value) + SlicePoly::linear(q0) * Rq;
    const double term_scale = 1.0 + std::max({p.max_coeff_norm(), value.norm(),
                                              (1.0 + q0.norm()) * Rq.max_coeff_norm()});
    failures += coeff_distance(rebuilt, p) > 1e-13 * term_scale;

    // (q - q0) * (q - conj q0) = (q - x0)^2 + y0^2.
    const Quaternion r = gen.quat(3.0);
    const SlicePoly product = SlicePoly::linear(r) * SlicePoly::linear(r.conj());
    const SlicePoly quadratic = SlicePoly::characteristic(Sphere::through(r));
    failures += coeff_distance(product, quadratic) > 1e-13 * (1.0 + r.norm2());

    // Representation formula: same value from two sample pairs.
    const Sphere s(gen.uniform(-2, 2), gen.uniform(0.1, 2));
    const Quaternion a = s.point(gen.unit_imag());
    const Quaternion b = s.point(gen.unit_imag());
    const Quaternion c = s.point(gen.unit_imag());
    const Quaternion q = s.point(gen.unit_imag());
    const Quaternion v1 = representation_eval({a, p(a), b, p(b)}, s, q);
    const Quaternion v2 = representation_eval({a, p(a), c, p(c)}, s, q);
    const Quaternion v3 = representation_eval({a, p(a), a.conj(), p(a.conj())}, s, q);
    const double rep = std::max((v1 - v2).norm(), (v1 - v3).norm());
    failures += rep > 1e-10 * (1.0 + p(q).norm());

    // A_{2n+1} = C_{2n+1}.
    const int d = static_cast<int>(p.degree());
    const auto A = expand_A(p, a, static_cast<std::size_t>(d) + 1).A;
    const auto C = *expand_C(p, s, a, b, static_cast<std::size_t>(d) + 1).C;
    double odd = 0.0;
    for (std::size_t n = 1; n < A.size(); n += 2) {
      odd = std::max(odd, (A[n] - C[n]).norm());
    }
    failures += odd > 1e-9 * scale_of(A);
  }
  const double elapsed = seconds_since(start);
  return {failures == 0 && elapsed < 5.0,
          fmt("%d randomized cases, %d outside tolerance, %.3f s (< 5 s)", cases, failures,
              elapsed)};
}

} // namespace

int main() {
  struct Criterion {
    const char *name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"expansion exactness", expansion_exactness},
      {"golden values", golden_values},
      {"integral/algebra agreement", integral_agreement},
      {"Cauchy estimates", cauchy_estimates},
      {"directional derivatives", derivatives},
      {"complex Jacobian", complex_jacobian_check},
      {"convergence dichotomy", convergence_dichotomy},
      {"algebraic identities", identity_suite},
  };
  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    Outcome o;
    try {
      o = criteria[n].run();
    } catch (const std::exception &e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("[%s] %zu %s: %s\n", o.pass ? "PASS" : "FAIL", n + 1, criteria[n].name,
                o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
