#pragma once

#include "genusbound/closedform.hpp"

#include <optional>
#include <string>

namespace genusbound {

// Obstructions to representing a class of non-negative square by an embedded
// sphere. AdmissiblePattern means "not obstructed here": the class matches
// one of the families that are actually spherical in the model manifolds.
// Unknown means this machinery has nothing to say (unsupported algebras and
// the open square-zero cases).

struct SphereVerdict {
    enum class Status { AdmissiblePattern, Obstructed, Unknown };

    Status status = Status::Unknown;
    std::string pattern;  // admissible family, e.g. "aF", "aH-(a-1)E1"
    std::string reason;   // obstruction: "h-positive",
                          // "T-nontrivial-positive-square", "pattern-exclusion"
    Vec reduced;          // reduced class when the case permits, else the input
    std::optional<Int> h;
    bool h_is_lower_bound = false;
    std::string note;
};

std::string to_string(SphereVerdict::Status s);

/// Requires A != 0 and A.A >= 0.
SphereVerdict sphere_check(const AlgebraDescriptor& alg, const Vec& A);

}  // namespace genusbound
