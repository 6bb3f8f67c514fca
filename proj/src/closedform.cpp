#include "genusbound/closedform.hpp"

namespace genusbound {

std::string to_string(HSign s) {
    switch (s) {
        case HSign::Negative: return "negative";
        case HSign::Zero: return "zero";
        case HSign::Positive: return "positive";
    }
    return "?";
}

Vec c_zero(const AlgebraDescriptor& alg) {
    Vec c = Vec::Zero(alg.form.rank);
    switch (classify_case(alg)) {
        case CaseTag::Case1:
            c[0] = 2;
            c[1] = 2;
            break;
        case CaseTag::Case2:
            break;  // zero class
        case CaseTag::Case3:
        case CaseTag::Extended42_1:
            c[1] = 2;
            break;
        case CaseTag::Case4:
            c[0] = 3;
            for (Int i = 1; i < alg.form.rank; ++i) c[i] = -1;
            break;
        case CaseTag::Case5:
            c[0] = 1;
            c[1] = -2;
            break;
        case CaseTag::Extended42_2:
            c[0] = -1;
            c[1] = 2;
            break;
        case CaseTag::Unsupported:
            throw UnsupportedCaseError("c_zero: unsupported case");
    }
    if (!is_adjunction_class(alg, c).any())
        throw InternalError("c_zero: canonical class failed the adjunction check");
    return c;
}

Int h_closed(const AlgebraDescriptor& alg, const Vec& A) {
    if (A.size() != alg.form.rank) throw RankMismatchError("h_closed: rank mismatch");
    CaseTag tag = classify_case(alg);
    switch (tag) {
        case CaseTag::Case1:
        case CaseTag::Case3:
        case CaseTag::Case4:
        case CaseTag::Case5: {
            if (norm(alg.form, A) < 0) throw PreconditionError("h_closed: A.A < 0");
            if (is_zero(A)) return 0;
            ReductionTrace tr = reduce(alg, A);
            return c_genus(alg, c_zero(alg), tr.output);
        }
        case CaseTag::Case2:
            // c0 = 0, so this is (A.A+2)/2 for A != 0, valid without reducing.
            return c_genus(alg, c_zero(alg), A);
        case CaseTag::Extended42_1:
        case CaseTag::Extended42_2:
            throw UnsupportedCaseError(
                "h_closed: use h_lower_bound for the tilde_b1 >= 4 cases");
        case CaseTag::Unsupported:
            throw UnsupportedCaseError("h_closed: unsupported case");
    }
    throw InternalError("h_closed: unreachable");
}

Int h_lower_bound(const AlgebraDescriptor& alg, const Vec& A) {
    if (A.size() != alg.form.rank) throw RankMismatchError("h_lower_bound: rank mismatch");
    CaseTag tag = classify_case(alg);
    if (tag != CaseTag::Extended42_1 && tag != CaseTag::Extended42_2)
        throw UnsupportedCaseError("h_lower_bound: only for the tilde_b1 >= 4 cases");
    if (norm(alg.form, A) < 0) throw PreconditionError("h_lower_bound: A.A < 0");
    if (is_zero(A)) return 0;
    ReductionTrace tr = reduce(alg, A);
    return c_genus(alg, c_zero(alg), tr.output);
}

namespace {

HSign sign_by_pattern(const AlgebraDescriptor& alg, CaseTag tag, const Vec& r) {
    Int a = r[0];
    switch (tag) {
        case CaseTag::Case1: {
            Int b = r[1];
            if (a > 1 && b == 0) return HSign::Negative;
            if ((b == 1 && a >= 1) || (a == 1 && b == 0) || (a == 0 && b == 0))
                return HSign::Zero;
            return HSign::Positive;
        }
        case CaseTag::Case3:
        case CaseTag::Case5: {
            Int b = r[1];
            if (a > 1 && b == 0) return HSign::Negative;
            if ((a == 1 && b == 0) || (a == 0 && b == 0)) return HSign::Zero;
            return HSign::Positive;
        }
        case CaseTag::Case2:
            return is_zero(r) ? HSign::Zero : HSign::Positive;
        case CaseTag::Case4: {
            if (is_zero(r)) return HSign::Zero;
            Int n = alg.form.rank - 1;
            auto b = [&](Int i) { return i <= n ? -r[i] : Int{0}; };
            bool rest_zero_from3 = true;
            for (Int i = 3; i <= n; ++i) rest_zero_from3 = rest_zero_from3 && b(i) == 0;
            bool rest_zero_from2 = rest_zero_from3 && b(2) == 0;
            bool rest_zero_from1 = rest_zero_from2 && b(1) == 0;
            // negative family: a(H - E1), a >= 2
            if (a >= 2 && b(1) == a && rest_zero_from2) return HSign::Negative;
            // zero families: H, 2H, H-E1, and a = b1+1 with b2 in {0,1}
            if (rest_zero_from1 && (a == 1 || a == 2)) return HSign::Zero;
            if (a == 1 && b(1) == 1 && rest_zero_from2) return HSign::Zero;
            if (b(1) >= 1 && a == b(1) + 1 && (b(2) == 0 || b(2) == 1) && rest_zero_from3)
                return HSign::Zero;
            return HSign::Positive;
        }
        default:
            throw UnsupportedCaseError("sign_class: unsupported case");
    }
}

}  // namespace

HSign sign_class(const AlgebraDescriptor& alg, const Vec& A) {
    CaseTag tag = classify_case(alg);
    if (tag == CaseTag::Extended42_1 || tag == CaseTag::Extended42_2 ||
        tag == CaseTag::Unsupported)
        throw UnsupportedCaseError("sign_class: only for Cases 1-5");
    Int h = h_closed(alg, A);
    Vec r = tag == CaseTag::Case2 ? A : reduce(alg, A).output;
    HSign s = sign_by_pattern(alg, tag, r);
    HSign from_h = h < 0 ? HSign::Negative : (h == 0 ? HSign::Zero : HSign::Positive);
    if (s != from_h)
        throw InternalError("sign_class: pattern and formula disagree on " + to_string(r));
    return s;
}

}  // namespace genusbound
