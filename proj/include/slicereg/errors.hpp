#pragma once

#include <stdexcept>
#include <string>

namespace slicereg {

/// Base class of every domain error raised by the library. `name()` is the
/// stable identifier the CLI propagates to the user.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string name, const std::string &what)
      : std::runtime_error(what), name_(std::move(name)) {}

  [[nodiscard]] const std::string &name() const noexcept { return name_; }

private:
  std::string name_;
};

#define SLICEREG_DEFINE_ERROR(Type)                                            \
  class Type : public DomainError {                                            \
  public:                                                                      \
    explicit Type(const std::string &what) : DomainError(#Type, what) {}       \
  }

SLICEREG_DEFINE_ERROR(DivisionByZero);
SLICEREG_DEFINE_ERROR(DegenerateSphere);
SLICEREG_DEFINE_ERROR(InvalidArgument);
SLICEREG_DEFINE_ERROR(PinchedContour);
SLICEREG_DEFINE_ERROR(KernelOffSlice);
SLICEREG_DEFINE_ERROR(PointOnContour);
SLICEREG_DEFINE_ERROR(NonUnitDirection);
SLICEREG_DEFINE_ERROR(RealPoint);
SLICEREG_DEFINE_ERROR(ZeroFunction);
SLICEREG_DEFINE_ERROR(InconsistentFactorization);

#undef SLICEREG_DEFINE_ERROR

} // namespace slicereg
