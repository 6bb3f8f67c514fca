#pragma once

#include "genusbound/algebra.hpp"

#include <vector>

namespace genusbound {

// Moves generating the isometries of the form that preserve Im T up to sign.
// Each move records its parameters so a trace can be replayed verbatim.
struct ReductionMove {
    enum class Kind {
        Negate,          // -Id, any case
        SwapFB,          // F <-> B; U-type forms with trivial T only
        ReflectE,        // E_i -> -E_i; Odd forms, i in 1..n
        PermuteE,        // E_i <-> E_j; Odd forms
        CremonaReflect,  // reflection along H-E1-E2-E3 (n >= 3) or, for
                         // n = 2, along the norm-two class 2H-E1-E2
        EOmega,          // B -> B + w - N(w)F on U+(-E8), fixing F
    };
    Kind kind;
    Int i = 0;  // ReflectE / PermuteE first index (basis position, 1-based)
    Int j = 0;  // PermuteE second index
    Vec omega;  // EOmega parameter, supported on the -E8 block

    static ReductionMove negate() { return {Kind::Negate, 0, 0, {}}; }
    static ReductionMove swap_fb() { return {Kind::SwapFB, 0, 0, {}}; }
    static ReductionMove reflect_e(Int i) { return {Kind::ReflectE, i, 0, {}}; }
    static ReductionMove permute_e(Int i, Int j) { return {Kind::PermuteE, i, j, {}}; }
    static ReductionMove cremona() { return {Kind::CremonaReflect, 0, 0, {}}; }
    static ReductionMove e_omega_move(Vec omega) {
        return {Kind::EOmega, 0, 0, std::move(omega)};
    }
};

/// Applies one move, validating that it is a legal isometry for this algebra.
Vec apply_move(const AlgebraDescriptor& alg, const ReductionMove& move, const Vec& A);

struct ReductionTrace {
    std::vector<ReductionMove> moves;
    Vec input;
    Vec output;

    /// Applies the recorded moves to `input`; equals `output` by construction.
    Vec replay(const AlgebraDescriptor& alg) const;
};

/// Literal transcription of the per-case reduced conditions.
bool is_reduced(const AlgebraDescriptor& alg, const Vec& A);

/// The isometry E_w of U + (-E8): F -> F, B -> B + w - N(w)F with
/// N(w) = w.w/2, and x -> x - (x.w)F on the -E8 summand. `omega` must be a
/// full-rank class supported on the -E8 block.
Vec e_omega(const IntersectionForm& form, const Vec& omega, const Vec& A);

/// Wall's vector: some w in the -E8 summand with xi + b*w = 0 or
/// 0 < |(xi+bw).(xi+bw)| < 2b^2. Deterministic: among all qualifying w the
/// one appearing first when boxes of radius 1, 2, ... are scanned in
/// lexicographic order, i.e. minimal under (max(1, |w|_inf), lex). Found by
/// an exact closest-point enumeration, which stays fast when xi is far from
/// the qualifying region.
Vec wall_vector(const IntersectionForm& form, const Vec& xi, Int b);

/// Carries A (with A.A >= 0) to a reduced representative of its orbit,
/// recording the moves. Unique output in Cases 1, 3, 4, 5; in Case 2 the
/// deterministic first representative reached.
ReductionTrace reduce(const AlgebraDescriptor& alg, const Vec& A);

}  // namespace genusbound
