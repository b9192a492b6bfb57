#pragma once

// Long double quaternion used for internal accumulation.

#include "slicereg/quaternion.hpp"

namespace slicereg::detail {

struct QuaternionL {
  long double w = 0.0L;
  long double x = 0.0L;
  long double y = 0.0L;
  long double z = 0.0L;

  QuaternionL() = default;
  QuaternionL(long double w_, long double x_ = 0.0L, long double y_ = 0.0L,
              long double z_ = 0.0L)
      : w(w_), x(x_), y(y_), z(z_) {}
  explicit QuaternionL(const Quaternion &q) : w(q.w), x(q.x), y(q.y), z(q.z) {}

  [[nodiscard]] QuaternionL conj() const { return {w, -x, -y, -z}; }
  [[nodiscard]] Quaternion to_double() const {
    return {static_cast<double>(w), static_cast<double>(x),
            static_cast<double>(y), static_cast<double>(z)};
  }
};

inline QuaternionL operator+(const QuaternionL &a, const QuaternionL &b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

inline QuaternionL operator-(const QuaternionL &a, const QuaternionL &b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

inline QuaternionL operator*(const QuaternionL &a, const QuaternionL &b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline QuaternionL inverse(const QuaternionL &q) {
  const long double n2 = q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
  const QuaternionL c = q.conj();
  return {c.w / n2, c.x / n2, c.y / n2, c.z / n2};
}

} // namespace slicereg::detail
