#include "genusbound/algebra.hpp"

namespace genusbound {

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::Case1: return "Case1";
        case CaseTag::Case2: return "Case2";
        case CaseTag::Case3: return "Case3";
        case CaseTag::Case4: return "Case4";
        case CaseTag::Case5: return "Case5";
        case CaseTag::Extended42_1: return "Extended42_1";
        case CaseTag::Extended42_2: return "Extended42_2";
        case CaseTag::Unsupported: return "Unsupported";
    }
    return "?";
}

static bool first_basis_vector_is_null(const IntersectionForm& form) {
    return form.gram(0, 0) == 0;
}

AlgebraDescriptor make_algebra(IntersectionForm form, Int b1, Int tilde_b1,
                               std::optional<Vec> f) {
    if (b1 < 0) throw InvalidArgumentError("b1 must be non-negative");
    if (tilde_b1 < 0) throw InvalidArgumentError("tilde_b1 must be non-negative");
    if (tilde_b1 % 2 != 0) throw InvalidArgumentError("tilde_b1 must be even");
    if (tilde_b1 > b1) throw InvalidArgumentError("tilde_b1 cannot exceed b1");

    AlgebraDescriptor alg;
    alg.form = std::move(form);
    alg.b1 = b1;
    alg.tilde_b1 = tilde_b1;

    if (tilde_b1 == 0) {
        if (f.has_value())
            throw InvalidArgumentError("F must be absent when tilde_b1 = 0");
        return alg;
    }

    if (!f.has_value()) {
        if (!first_basis_vector_is_null(alg.form))
            throw InvalidArgumentError(
                "tilde_b1 > 0 requires an explicit F for this form");
        Vec e1 = Vec::Zero(alg.form.rank);
        e1[0] = 1;
        f = e1;
    }
    if (f->size() != alg.form.rank)
        throw RankMismatchError("F has the wrong length for the form");
    if (norm(alg.form, *f) != 0)
        throw InvalidArgumentError("F must satisfy F.F = 0");
    if (content(*f) != 1)
        throw InvalidArgumentError("F must be primitive");

    bool fb_basis = alg.form.tag.kind != FormKind::Odd;
    if (fb_basis) {
        // The case machinery is stated in the basis where F is the first
        // basis vector; accept nothing else for U, V and U + q(-E8).
        Vec e1 = Vec::Zero(alg.form.rank);
        e1[0] = 1;
        if (*f != e1)
            throw InvalidArgumentError(
                "F must be the first basis vector for forms with an F,B basis");
    }
    alg.im_t_generator = std::move(f);
    return alg;
}

Int modified_euler(const AlgebraDescriptor& alg) {
    return checked_sub(checked_add(2, alg.form.rank), checked_mul(2, alg.tilde_b1));
}

Int two_chi_three_sigma(const AlgebraDescriptor& alg) {
    return checked_add(checked_mul(2, modified_euler(alg)),
                       checked_mul(3, alg.form.sigma()));
}

LefschetzReduction lefschetz_reduce(const AlgebraDescriptor& alg) {
    LefschetzReduction out;
    out.reduced = alg;
    out.reduced.b1 = alg.tilde_b1;
    out.split_count = alg.b1 - alg.tilde_b1;
    return out;
}

CaseTag classify_case(const AlgebraDescriptor& alg) {
    FormKind kind = alg.form.tag.kind;
    Int param = alg.form.tag.param;
    // Even(0) is the hyperbolic plane under another name.
    bool is_u = kind == FormKind::Hyperbolic || (kind == FormKind::Even && param == 0);
    bool is_u_e8 = kind == FormKind::Even && param == 1;
    bool is_v = kind == FormKind::Vform;
    bool is_odd_small = kind == FormKind::Odd && param >= 0 && param <= 9;

    if (alg.tilde_b1 == 0) {
        if (is_u) return CaseTag::Case1;
        if (is_u_e8) return CaseTag::Case2;
        if (is_odd_small) return CaseTag::Case4;
        return CaseTag::Unsupported;
    }
    if (alg.tilde_b1 == 2) {
        if (is_u) return CaseTag::Case3;
        if (is_v) return CaseTag::Case5;
        return CaseTag::Unsupported;
    }
    if (is_u) return CaseTag::Extended42_1;
    if (is_v) return CaseTag::Extended42_2;
    return CaseTag::Unsupported;
}

}  // namespace genusbound
