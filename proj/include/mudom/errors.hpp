#pragma once

#include <stdexcept>
#include <string>

namespace mudom {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inputs outside an operation's domain of definition.
struct DegenerateDenominator : Error { using Error::Error; };
struct CoincidentPoints : Error { using Error::Error; };
struct OutsideDomain : Error { using Error::Error; };
struct NotOnBoundary : Error { using Error::Error; };
struct InvalidParameter : Error { using Error::Error; };
struct UnknownStratum : Error { using Error::Error; };

// Numerical machinery that gave up or contradicted itself.
struct SolverFailure : Error { using Error::Error; };
struct InterpolationFailure : Error {
  InterpolationFailure(const std::string& what, double best)
      : Error(what), best_residual(best) {}
  double best_residual;
};
struct InternalInconsistency : Error { using Error::Error; };

// Bad JSON or schema violations at the tool boundary.
struct MalformedInput : Error { using Error::Error; };

}  // namespace mudom
