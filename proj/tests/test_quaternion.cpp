#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "slicereg/quaternion.hpp"

using namespace slicereg;
using oracle::table_mul;

namespace {

bool near(const Quaternion &a, const Quaternion &b, double tol = 1e-14) {
  return (a - b).norm() <= tol;
}

} // namespace

TEST_CASE("multiplication table") {
  CHECK(basis::i * basis::j == basis::k);
  CHECK(basis::j * basis::i == -basis::k);
  CHECK(basis::j * basis::k == basis::i);
  CHECK(basis::k * basis::i == basis::j);
  for (const auto &u : {basis::i, basis::j, basis::k}) {
    CHECK(u * u == -basis::one);
  }
  const Quaternion q{1.5, -2.0, 0.25, 3.0};
  CHECK(basis::one * q == q);
  CHECK(mul(basis::i + basis::j, basis::i - basis::j) == Quaternion{0, 0, 0, -2});
}

TEST_CASE("product matches the table oracle") {
  oracle::Gen gen(11);
  for (int t = 0; t < 200; ++t) {
    const Quaternion a = gen.quat(3.0);
    const Quaternion b = gen.quat(3.0);
    CHECK(near(a * b, table_mul(a, b), 1e-13));
  }
}

TEST_CASE("conjugate, modulus and inverse") {
  CHECK(conj(Quaternion{1, 1}) == Quaternion{1, -1});
  CHECK(inverse(basis::i) == -basis::i);
  CHECK(modulus(Quaternion{3, 0, 0, 4}) == doctest::Approx(5.0));
  CHECK_THROWS_AS(inverse(Quaternion{}), DivisionByZero);
  CHECK_THROWS_AS(inverse(Quaternion{1e-300}), DivisionByZero);

  oracle::Gen gen(12);
  for (int t = 0; t < 100; ++t) {
    const Quaternion q = gen.quat(5.0);
    const Quaternion qq = q * q.conj();
    CHECK(std::abs(qq.w - q.norm2()) <= 1e-12 * q.norm2());
    CHECK(qq.im_norm() <= 1e-12 * q.norm2());
    CHECK(near(q * q.inverse(), basis::one, 1e-13));
  }
}

TEST_CASE("algebraic invariants on random triples") {
  oracle::Gen gen(13);
  for (int t = 0; t < 500; ++t) {
    const Quaternion a = gen.quat(4.0);
    const Quaternion b = gen.quat(4.0);
    const Quaternion c = gen.quat(4.0);
    const Quaternion left = (a * b) * c;
    const Quaternion right = a * (b * c);
    CHECK((left - right).norm() <= 1e-12 * (1.0 + a.norm() * b.norm() * c.norm()));
    CHECK(std::abs((a * b).norm() - a.norm() * b.norm()) <=
          1e-12 * a.norm() * b.norm());
  }
}

TEST_CASE("imaginary units") {
  const ImaginaryUnit I;
  CHECK(I.value() == basis::i);
  CHECK_THROWS_AS(ImaginaryUnit(Quaternion{0, 2, 0, 0}), InvalidArgument);
  CHECK_THROWS_AS(ImaginaryUnit(Quaternion{0.1, 1, 0, 0}), InvalidArgument);
  CHECK_THROWS_AS(ImaginaryUnit::normalized(Quaternion{3}), InvalidArgument);

  oracle::Gen gen(14);
  for (int t = 0; t < 100; ++t) {
    const ImaginaryUnit u = gen.unit_imag();
    CHECK(near(u.value() * u.value(), -basis::one, 1e-12));
    const ImaginaryUnit J = u.orthogonal();
    CHECK(std::abs((u.value() * J.value()).w) <= 1e-12);
    CHECK(J.value().w == 0.0);
    CHECK(std::abs(J.value().norm() - 1.0) <= 1e-12);
    const std::complex<double> z{gen.uniform(-2, 2), gen.uniform(-2, 2)};
    CHECK(std::abs(u.project(u.embed(z)) - z) <= 1e-14);
    CHECK(u.off_plane(u.embed(z)) <= 1e-14);
  }
}

TEST_CASE("slice_decompose") {
  auto d = slice_decompose(Quaternion{1, 0, 2, 0});
  CHECK(d.x == 1.0);
  CHECK(d.y == 2.0);
  CHECK(d.I.value() == basis::j);

  d = slice_decompose(Quaternion{5});
  CHECK(d.x == 5.0);
  CHECK(d.y == 0.0);
  CHECK(d.I.value() == basis::i);

  d = slice_decompose(Quaternion{1, 1, 1, 0});
  CHECK(d.y == doctest::Approx(std::numbers::sqrt2));
  CHECK(near(d.I.value(), Quaternion{0, 1, 1, 0} / std::numbers::sqrt2));

  oracle::Gen gen(15);
  for (int t = 0; t < 100; ++t) {
    const Quaternion q = gen.quat(3.0);
    const auto s = slice_decompose(q);
    CHECK(s.y >= 0.0);
    CHECK(near(Quaternion{s.x} + s.I.value() * s.y, q, 1e-14));
  }
}

TEST_CASE("coordinate_extract") {
  const auto k = coordinate_extract(basis::k);
  CHECK(k == std::array<double, 4>{0, 0, 0, 1});
  CHECK(coordinate_extract(Quaternion{}) == std::array<double, 4>{0, 0, 0, 0});

  // Brute-force evaluation of the four conjugation identities.
  const Quaternion q{1, 2, 3, 4};
  const Quaternion i = basis::i, j = basis::j, kk = basis::k;
  const Quaternion x0 = (q - table_mul(table_mul(i, q), i) -
                         table_mul(table_mul(j, q), j) -
                         table_mul(table_mul(kk, q), kk)) / 4.0;
  CHECK(near(x0, Quaternion{1}));
  const auto c = coordinate_extract(q);
  for (int n = 0; n < 4; ++n) {
    CHECK(c[n] == doctest::Approx(n + 1.0).epsilon(1e-15));
  }

  oracle::Gen gen(16);
  for (int t = 0; t < 500; ++t) {
    const Quaternion r = gen.quat(10.0);
    const auto e = coordinate_extract(r);
    const auto s = r.components();
    for (int n = 0; n < 4; ++n) {
      CHECK(std::abs(e[n] - s[n]) <= 1e-12 * (1.0 + r.norm()));
    }
  }
}

TEST_CASE("sigma distance") {
  CHECK(sigma_distance(basis::i, 2.0 * basis::i) == doctest::Approx(1.0));
  CHECK(sigma_distance(basis::i, basis::j) == doctest::Approx(2.0));
  CHECK(sigma_distance(Quaternion{1, 1}, Quaternion{2, 0, 2}) ==
        doctest::Approx(std::sqrt(10.0)));
  CHECK(sigma_distance(Quaternion{3}, basis::j) == doctest::Approx(std::sqrt(10.0)));

  oracle::Gen gen(17);
  for (int t = 0; t < 500; ++t) {
    const Quaternion p = gen.quat(2.0);
    const Quaternion q = t % 3 == 0 ? Quaternion{gen.uniform(-2, 2)} + p.im() * gen.uniform(-2, 2)
                                    : gen.quat(2.0);
    const double s = sigma_distance(p, q);
    const double d = (p - q).norm();
    CHECK(s >= d - 1e-14);
    if (same_slice(p, q)) {
      CHECK(s == doctest::Approx(d));
    } else {
      CHECK(s > d);
    }
  }
}

TEST_CASE("sphere") {
  CHECK_THROWS_AS(Sphere(0.0, -1.0), InvalidArgument);
  CHECK_THROWS_AS(Sphere(std::nan(""), 1.0), InvalidArgument);
  const Sphere s = Sphere::through(Quaternion{1, 0, 3, 4});
  CHECK(s.x0() == 1.0);
  CHECK(s.y0() == 5.0);
  CHECK(s.contains(s.point(ImaginaryUnit::normalized({0, 1, -1, 2})), 1e-12));
  CHECK(near(s.characteristic(s.point(ImaginaryUnit{})), Quaternion{}, 1e-13));
  CHECK(Sphere(2.0, 0.0).degenerate());
}

TEST_CASE("representation formula") {
  const Sphere S(0.0, 1.0);
  // q^2 on S.
  CHECK(near(representation_eval({basis::i, -basis::one, basis::j, -basis::one}, S, basis::k),
             -basis::one));
  // q on S.
  CHECK(near(representation_eval({basis::i, basis::i, basis::j, basis::j}, S, basis::k),
             basis::k));
  const Quaternion c{0.5, -1, 2, 0.25};
  CHECK(near(representation_eval({basis::i, c, -basis::i, c}, S, basis::j), c, 1e-14));
  CHECK_THROWS_AS(representation_eval({basis::i, c, basis::i, c}, S, basis::j),
                  DegenerateSphere);
  CHECK_THROWS_AS(representation_eval({basis::i, c, basis::j, c}, S, Quaternion{2}),
                  InvalidArgument);
}

TEST_CASE("representation formula is independent of the sample pair") {
  oracle::Gen gen(18);
  for (int t = 0; t < 200; ++t) {
    const SlicePoly f = gen.poly(gen.integer(0, 8), 5.0);
    const Sphere s = gen.sphere(2.0, 2.0);
    if (s.y0() < 1e-3) {
      continue;
    }
    const auto sample = [&](const Quaternion &p) {
      return oracle::eval_powers(f, p);
    };
    const Quaternion q = s.point(gen.unit_imag());
    const Quaternion want = sample(q);
    const Quaternion p1 = s.point(gen.unit_imag());
    const Quaternion p2 = s.point(gen.unit_imag());
    const Quaternion p3 = p1.conj();
    const Quaternion a = representation_eval({p1, sample(p1), p2, sample(p2)}, s, q);
    const Quaternion b = representation_eval({p1, sample(p1), p3, sample(p3)}, s, q);
    CHECK((a - b).norm() <= 1e-10 * (1.0 + want.norm()));
    CHECK((b - want).norm() <= 1e-10 * (1.0 + want.norm()));
  }
}
