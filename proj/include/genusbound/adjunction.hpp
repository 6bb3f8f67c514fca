#pragma once

#include "genusbound/algebra.hpp"

#include <optional>

namespace genusbound {

struct AdjunctionVerdict {
    bool type_one = false;
    bool type_two = false;
    bool any() const { return type_one || type_two; }
};

/// Type I: characteristic and c.c >= sigma + 8 (the sharp form of
/// c.c > sigma, since characteristic norms are sigma mod 8).
/// Type II: characteristic, c.c >= 2*chi~ + 3*sigma, and c.F != 0.
/// When T is trivial type II is reported false by convention.
AdjunctionVerdict is_adjunction_class(const AlgebraDescriptor& alg, const Vec& c);

/// 1 + (A.A - |c.A|)/2 for A != 0, and 0 for A = 0. Requires c to be an
/// adjunction class and A.A >= 0. Always an integer because c is
/// characteristic.
Int c_genus(const AlgebraDescriptor& alg, const Vec& c, const Vec& A);

struct HWitness {
    Int value = 0;
    Vec witness;  // an adjunction class attaining the value
    Int bound = 0;

    /// Re-evaluates value = h_witness(A); used by tests.
    bool consistent(const AlgebraDescriptor& alg, const Vec& A) const;
};

/// Independent maximization oracle for h. Searches every integer vector c
/// with all coefficients in [-bound, bound], keeps the adjunction classes of
/// either type, and returns the maximal h_c(A). Returns nullopt when the box
/// contains no adjunction class at all.
///
/// Deterministic: since h_c = h_{-c} and adjunction membership is symmetric
/// under negation, the witness is reported as the representative with
/// positive leading coefficient, lexicographically smallest among the
/// optimal ones.
///
/// Exact by construction: diagonal forms with trivial T go through a
/// min-budget dynamic program over the box, everything else through a
/// depth-first scan with sound interval pruning. Both return exactly the
/// box optimum.
std::optional<HWitness> h_bruteforce(const AlgebraDescriptor& alg, const Vec& A,
                                     Int bound);

/// 3 * max|A_i| + 5, clamped to at least 9. Large enough that every known
/// optimal adjunction class fits with slack.
Int default_bound(const Vec& A);

}  // namespace genusbound
