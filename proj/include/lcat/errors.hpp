#pragma once

#include <stdexcept>
#include <string>

namespace lcat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Group / subgroup construction failures.
struct NonAssociativeTable : Error { using Error::Error; };
struct NoIdentity : Error { using Error::Error; };
struct NoInverse : Error { using Error::Error; };
struct NotASubgroup : Error { using Error::Error; };
struct ParentMismatch : Error { using Error::Error; };
struct InvalidChain : Error { using Error::Error; };

// Simplex / morphism failures.
struct BadCoordinates : Error { using Error::Error; };
struct BadInclusion : Error { using Error::Error; };
struct ChainMismatch : Error { using Error::Error; };
struct NotComposable : Error { using Error::Error; };

// Complex construction failures.
struct NotClosedUnderAction : Error { using Error::Error; };
struct NotClosedUnderFaces : Error { using Error::Error; };
struct InvalidComplex : Error { using Error::Error; };

// Colimits / diagrams / search.
struct NonFunctorialDiagram : Error { using Error::Error; };
struct NotIsovariantAttachment : Error { using Error::Error; };
struct SearchBudgetExceeded : Error { using Error::Error; };

// CLI / IO.
struct InvalidInput : Error { using Error::Error; };

}  // namespace lcat
