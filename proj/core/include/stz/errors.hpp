#pragma once

#include <stdexcept>
#include <string>

namespace stz {

// Base of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define STZ_ERROR_TYPE(Name) \
  struct Name final : Error { using Error::Error; }

// permutations
STZ_ERROR_TYPE(RepeatedPoint);
STZ_ERROR_TYPE(PointOutOfRange);
STZ_ERROR_TYPE(MalformedSyntax);
STZ_ERROR_TYPE(DegreeMismatch);
STZ_ERROR_TYPE(NotTransitive);

// origamis and orbits
STZ_ERROR_TYPE(OrbitBudgetExceeded);
STZ_ERROR_TYPE(NotUnimodular);

// groups and characters
STZ_ERROR_TYPE(GroupBudgetExceeded);
STZ_ERROR_TYPE(NoSuitablePrime);
STZ_ERROR_TYPE(NotSubgroup);
STZ_ERROR_TYPE(GroupMismatch);
STZ_ERROR_TYPE(NonIntegerMultiplicity);
STZ_ERROR_TYPE(NotGenerating);
STZ_ERROR_TYPE(IdentityElement);
STZ_ERROR_TYPE(ZeroMultiplicity);

// homology
STZ_ERROR_TYPE(NotACycle);
STZ_ERROR_TYPE(LiftFailed);
STZ_ERROR_TYPE(NotAutomorphism);
STZ_ERROR_TYPE(ProjectorNotIdempotent);

// monodromy
STZ_ERROR_TYPE(PieceNotPreserved);
STZ_ERROR_TYPE(DichotomyInconclusive);

#undef STZ_ERROR_TYPE

}  // namespace stz
