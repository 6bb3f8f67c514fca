#pragma once

#include "genusbound/lattice.hpp"

#include <optional>

namespace genusbound {

// A cohomology algebra of b+ = 1 type, abstracted to what the genus bound
// actually consumes: the intersection form, the first Betti number, the rank
// of the cup product on degree one, and the generator F of its image. The
// full graded multiplication carries no further information here.

/// Immutable once constructed; safe for concurrent reads.
struct AlgebraDescriptor {
    IntersectionForm form;
    Int b1 = 0;
    Int tilde_b1 = 0;
    std::optional<Vec> im_t_generator;  // F; present iff tilde_b1 > 0

    bool t_trivial() const { return tilde_b1 == 0; }
    const Vec& f() const { return *im_t_generator; }
};

/// Validates and builds a descriptor.
///
/// tilde_b1 must be even and at most b1. When tilde_b1 > 0 a generator F is
/// required: it must be primitive with F.F = 0, and for the U and V forms it
/// must be the first basis vector (the basis convention every reduced-class
/// definition is stated in). If omitted it defaults to the first basis
/// vector where that vector is null.
AlgebraDescriptor make_algebra(IntersectionForm form, Int b1, Int tilde_b1,
                               std::optional<Vec> f = std::nullopt);

enum class CaseTag {
    Case1,  // T trivial, U
    Case2,  // T trivial, U + (-E8)
    Case3,  // tilde_b1 = 2, U
    Case4,  // T trivial, <1> + n<-1>, 0 <= n <= 9
    Case5,  // tilde_b1 = 2, V
    Extended42_1,  // tilde_b1 >= 4, U
    Extended42_2,  // tilde_b1 >= 4, V
    Unsupported,
};

std::string to_string(CaseTag tag);

Int modified_euler(const AlgebraDescriptor& alg);  // 2 + b2 - 2*tilde_b1

Int two_chi_three_sigma(const AlgebraDescriptor& alg);

struct LefschetzReduction {
    AlgebraDescriptor reduced;
    Int split_count;  // b1 - tilde_b1 rank-one summands split off
};

LefschetzReduction lefschetz_reduce(const AlgebraDescriptor& alg);

/// Deterministic in (form tag, tilde_b1). Even(0) and Hyperbolic carry the
/// same form and classify identically. Unsupported is a value, not an error.
CaseTag classify_case(const AlgebraDescriptor& alg);

}  // namespace genusbound
