#include "slicereg/json_io.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace slicereg::io {

std::string format_double(double v) {
  if (!std::isfinite(v)) {
    return "null";
  }
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 17);
  return {buf.data(), res.ptr};
}

std::string to_json(const Quaternion &q) {
  return "[" + format_double(q.w) + "," + format_double(q.x) + "," +
         format_double(q.y) + "," + format_double(q.z) + "]";
}

std::string to_json(const SlicePoly &f) {
  std::string out = "{\"coeffs\":[";
  bool first = true;
  for (const auto &a : f.coeffs()) {
    if (!first) {
      out += ",";
    }
    first = false;
    out += to_json(a);
  }
  return out + "]}";
}

Quaternion quaternion_from_json(const nlohmann::json &j,
                                const std::string &field) {
  if (!j.is_array() || j.size() != 4) {
    throw ParseError(field, "expected an array of 4 numbers [w,x,y,z]");
  }
  std::array<double, 4> c{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (!j[i].is_number()) {
      throw ParseError(field + "[" + std::to_string(i) + "]",
                       "expected a number");
    }
    c[i] = j[i].get<double>();
    if (!std::isfinite(c[i])) {
      throw ParseError(field + "[" + std::to_string(i) + "]",
                       "expected a finite number");
    }
  }
  return {c[0], c[1], c[2], c[3]};
}

Quaternion parse_quaternion(std::string_view text, const std::string &field) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(field, std::string("invalid JSON: ") + e.what());
  }
  return quaternion_from_json(j, field);
}

SlicePoly poly_from_json(const nlohmann::json &j, const std::string &field,
                         double trim_tol) {
  if (!j.is_object() || !j.contains("coeffs")) {
    throw ParseError(field, "expected an object with a \"coeffs\" array");
  }
  const auto &arr = j.at("coeffs");
  if (!arr.is_array()) {
    throw ParseError(field + ".coeffs", "expected an array");
  }
  std::vector<Quaternion> coeffs;
  coeffs.reserve(arr.size());
  for (std::size_t n = 0; n < arr.size(); ++n) {
    coeffs.push_back(quaternion_from_json(
        arr[n], field + ".coeffs[" + std::to_string(n) + "]"));
  }
  return SlicePoly(std::move(coeffs), trim_tol);
}

SlicePoly parse_poly(std::string_view text, const std::string &field,
                     double trim_tol) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(field, std::string("invalid JSON: ") + e.what());
  }
  return poly_from_json(j, field, trim_tol);
}

} // namespace slicereg::io
