#pragma once

#include <stdexcept>
#include <string>

namespace hofer {

/// Base of every domain error raised by the library. `kind()` is the stable
/// name used in CLI error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define HOFER_DEFINE_ERROR(Name)                                        \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& what) : Error(#Name, what) {}      \
  };

HOFER_DEFINE_ERROR(UnsupportedSystem)
HOFER_DEFINE_ERROR(DimensionError)
HOFER_DEFINE_ERROR(DegenerateSubgroup)
HOFER_DEFINE_ERROR(InvalidWeights)
HOFER_DEFINE_ERROR(DegenerateOrbit)
HOFER_DEFINE_ERROR(EmptyFamily)
HOFER_DEFINE_ERROR(NotDominant)
HOFER_DEFINE_ERROR(NumericalFailure)
HOFER_DEFINE_ERROR(EnergyBoundViolation)
HOFER_DEFINE_ERROR(InexactDivision)
HOFER_DEFINE_ERROR(InvalidArgument)

#undef HOFER_DEFINE_ERROR

}  // namespace hofer
