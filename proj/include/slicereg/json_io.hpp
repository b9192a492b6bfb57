#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "slicereg/slice_poly.hpp"

namespace slicereg::io {

/// Malformed input. `field()` names the offending JSON field or CLI flag.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string field, const std::string &what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  [[nodiscard]] const std::string &field() const { return field_; }

private:
  std::string field_;
};

/// Decimal form with 17 significant digits ("%.17g").
/// Non-finite values print as null.
std::string format_double(double v);

std::string to_json(const Quaternion &q);
/// {"coeffs": [[w,x,y,z], ...]} with the lowest power first.
std::string to_json(const SlicePoly &f);

/// [w, x, y, z]; `field` is used in error messages.
Quaternion quaternion_from_json(const nlohmann::json &j,
                                const std::string &field);
Quaternion parse_quaternion(std::string_view text, const std::string &field);

/// Reads the coefficient list exactly as given; trimming happens when the
/// SlicePoly is built with `trim_tol`.
SlicePoly poly_from_json(const nlohmann::json &j, const std::string &field,
                         double trim_tol = kCoeffTol);
SlicePoly parse_poly(std::string_view text, const std::string &field,
                     double trim_tol = kCoeffTol);

} // namespace slicereg::io
