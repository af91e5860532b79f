#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace deltashell {

// Config errors are caller mistakes (bad input data); numerical errors are
// runtime conditions detected while evaluating. The CLI maps them to exit
// status 2 and 1 respectively.
enum class ErrorKind { Config, Numerical };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string name, const std::string& what)
      : std::runtime_error(what), kind_(kind), name_(std::move(name)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }

 private:
  ErrorKind kind_;
  std::string name_;
};

#define DELTASHELL_ERROR_CLASS(ClassName, Kind)                          \
  class ClassName : public Error {                                       \
   public:                                                               \
    explicit ClassName(const std::string& what)                          \
        : Error(ErrorKind::Kind, #ClassName, #ClassName ": " + what) {}  \
  };

DELTASHELL_ERROR_CLASS(ZeroArgument, Numerical)
DELTASHELL_ERROR_CLASS(OrderTooLarge, Numerical)
DELTASHELL_ERROR_CLASS(SingularMatrix, Numerical)
DELTASHELL_ERROR_CLASS(BranchResidual, Numerical)
DELTASHELL_ERROR_CLASS(NearSingularBoundary, Numerical)
DELTASHELL_ERROR_CLASS(GridTooCoarse, Numerical)
DELTASHELL_ERROR_CLASS(GridCollision, Numerical)
DELTASHELL_ERROR_CLASS(DegenerateBasis, Numerical)
DELTASHELL_ERROR_CLASS(ThresholdCritical, Numerical)
DELTASHELL_ERROR_CLASS(NonincreasingRadii, Config)
DELTASHELL_ERROR_CLASS(NonpositiveRadius, Config)
DELTASHELL_ERROR_CLASS(LengthMismatch, Config)
DELTASHELL_ERROR_CLASS(ConfigError, Config)

#undef DELTASHELL_ERROR_CLASS

}  // namespace deltashell
