#include "slicereg/slice_poly.hpp"

#include <algorithm>

namespace slicereg {

namespace {

std::vector<Quaternion> trimmed(std::vector<Quaternion> c, double tol) {
  double biggest = 0.0;
  for (const auto &a : c) {
    biggest = std::max(biggest, a.norm());
  }
  const double eps = tol * (1.0 + biggest);
  while (!c.empty() && c.back().norm() <= eps) {
    c.pop_back();
  }
  return c;
}

} // namespace

SlicePoly::SlicePoly(std::vector<Quaternion> coeffs, double trim_tol)
    : coeffs_(trimmed(std::move(coeffs), trim_tol)) {}

SlicePoly SlicePoly::characteristic(const Sphere &s) {
  const double x0 = s.x0();
  const double y0 = s.y0();
  return SlicePoly({Quaternion{x0 * x0 + y0 * y0}, Quaternion{-2.0 * x0},
                    basis::one});
}

double SlicePoly::max_coeff_norm() const {
  double m = 0.0;
  for (const auto &a : coeffs_) {
    m = std::max(m, a.norm());
  }
  return m;
}

bool SlicePoly::has_real_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Quaternion &a) { return a.im_norm() == 0.0; });
}

Quaternion SlicePoly::operator()(const Quaternion &q) const {
  Quaternion acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = *it + q * acc;
  }
  return acc;
}

Quaternion eval_left(const SlicePoly &f, const Quaternion &q) { return f(q); }

SlicePoly add(const SlicePoly &f, const SlicePoly &g) {
  const auto n = std::max(f.coeffs().size(), g.coeffs().size());
  std::vector<Quaternion> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = f[i] + g[i];
  }
  return SlicePoly(std::move(c));
}

SlicePoly sub(const SlicePoly &f, const SlicePoly &g) {
  const auto n = std::max(f.coeffs().size(), g.coeffs().size());
  std::vector<Quaternion> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = f[i] - g[i];
  }
  return SlicePoly(std::move(c));
}

SlicePoly scale(const SlicePoly &f, const Quaternion &c) {
  std::vector<Quaternion> out(f.coeffs().begin(), f.coeffs().end());
  for (auto &a : out) {
    a = a * c;
  }
  return SlicePoly(std::move(out));
}

SlicePoly star_mul(const SlicePoly &f, const SlicePoly &g) {
  if (f.is_zero() || g.is_zero()) {
    return {};
  }
  const auto a = f.coeffs();
  const auto b = g.coeffs();
  std::vector<Quaternion> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] += a[i] * b[j];
    }
  }
  return SlicePoly(std::move(c));
}

SlicePoly star_pow(const SlicePoly &f, unsigned n) {
  SlicePoly out = SlicePoly::constant(basis::one);
  for (unsigned i = 0; i < n; ++i) {
    out = star_mul(out, f);
  }
  return out;
}

RemainderDivision remainder_div(const SlicePoly &f, const Quaternion &q0) {
  const auto a = f.coeffs();
  if (a.size() <= 1) {
    return {f[0], SlicePoly{}};
  }
  const std::size_t d = a.size() - 1;
  std::vector<Quaternion> g(d);
  g[d - 1] = a[d];
  for (std::size_t n = d - 1; n >= 1; --n) {
    g[n - 1] = a[n] + q0 * g[n];
  }
  const Quaternion value = a[0] + q0 * g[0];
  return {value, SlicePoly(std::move(g))};
}

QuadraticDivision quadratic_div(const SlicePoly &f, const Sphere &s) {
  if (f.degree() < 2) {
    return {SlicePoly{}, f};
  }
  // Divisor q^2 + p1 q + p0 with real p0, p1; it commutes with everything.
  const double p1 = -2.0 * s.x0();
  const double p0 = s.x0() * s.x0() + s.y0() * s.y0();
  std::vector<Quaternion> r(f.coeffs().begin(), f.coeffs().end());
  const std::size_t d = r.size() - 1;
  std::vector<Quaternion> q(d - 1);
  for (std::size_t k = d - 1; k-- > 0;) {
    const Quaternion lead = r[k + 2];
    q[k] = lead;
    r[k + 1] -= lead * p1;
    r[k] -= lead * p0;
    r[k + 2] = Quaternion{};
  }
  r.resize(2);
  return {SlicePoly(std::move(q)), SlicePoly(std::move(r))};
}

double coeff_distance(const SlicePoly &f, const SlicePoly &g) {
  const auto n = std::max(f.coeffs().size(), g.coeffs().size());
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    m = std::max(m, (f[i] - g[i]).norm());
  }
  return m;
}

} // namespace slicereg
