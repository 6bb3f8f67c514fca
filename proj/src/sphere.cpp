#include "genusbound/sphere.hpp"

namespace genusbound {

std::string to_string(SphereVerdict::Status s) {
    switch (s) {
        case SphereVerdict::Status::AdmissiblePattern: return "admissible";
        case SphereVerdict::Status::Obstructed: return "obstructed";
        case SphereVerdict::Status::Unknown: return "unknown";
    }
    return "?";
}

namespace {

// Families of Proposition-style admissible classes, matched on the reduced
// representative. Empty string means no family matches.
std::string match_pattern(const AlgebraDescriptor& alg, CaseTag tag, const Vec& r,
                          Int square) {
    Int a = r[0];
    switch (tag) {
        case CaseTag::Case1: {
            Int b = r[1];
            if (square > 0 && b == 1 && a >= 1) return "aF+B";
            if (square == 0 && b == 0 && a >= 1) return "aF";
            return "";
        }
        case CaseTag::Case3:
        case CaseTag::Case5: {
            Int b = r[1];
            if (square == 0 && b == 0 && a >= 1) return "aF";
            return "";
        }
        case CaseTag::Case4: {
            Int n = alg.form.rank - 1;
            auto b = [&](Int i) { return i <= n ? -r[i] : Int{0}; };
            bool zero_from2 = true;
            for (Int i = 2; i <= n; ++i) zero_from2 = zero_from2 && b(i) == 0;
            bool zero_from3 = true;
            for (Int i = 3; i <= n; ++i) zero_from3 = zero_from3 && b(i) == 0;
            if (square > 0) {
                if (a == 1 && b(1) == 0 && zero_from2) return "H";
                if (a == 2 && b(1) == 0 && zero_from2) return "2H";
                if (a >= 2 && b(1) == a - 1 && zero_from2) return "aH-(a-1)E1";
                if (a >= 2 && b(1) == a - 1 && b(2) == 1 && zero_from3)
                    return "aH-(a-1)E1-E2";
            } else {
                if (a >= 1 && b(1) == a && zero_from2) return "a(H-E1)";
            }
            return "";
        }
        default:
            return "";
    }
}

}  // namespace

SphereVerdict sphere_check(const AlgebraDescriptor& alg, const Vec& A) {
    if (A.size() != alg.form.rank) throw RankMismatchError("sphere_check: rank mismatch");
    if (is_zero(A)) throw PreconditionError("sphere_check: A must be nonzero");
    Int square = norm(alg.form, A);
    if (square < 0) throw PreconditionError("sphere_check: A.A < 0");

    SphereVerdict v;
    v.reduced = A;
    CaseTag tag = classify_case(alg);

    if (!alg.t_trivial() && square > 0) {
        v.status = SphereVerdict::Status::Obstructed;
        v.reason = "T-nontrivial-positive-square";
        if (tag != CaseTag::Unsupported) v.reduced = reduce(alg, A).output;
        return v;
    }

    switch (tag) {
        case CaseTag::Case1:
        case CaseTag::Case2:
        case CaseTag::Case3:
        case CaseTag::Case4:
        case CaseTag::Case5: {
            v.reduced = tag == CaseTag::Case2 ? A : reduce(alg, A).output;
            v.h = h_closed(alg, A);
            if (*v.h > 0) {
                v.status = SphereVerdict::Status::Obstructed;
                v.reason = "h-positive";
                return v;
            }
            std::string pat = match_pattern(alg, tag, v.reduced, square);
            if (!pat.empty()) {
                v.status = SphereVerdict::Status::AdmissiblePattern;
                v.pattern = pat;
            } else {
                v.status = SphereVerdict::Status::Obstructed;
                v.reason = "pattern-exclusion";
            }
            return v;
        }
        case CaseTag::Extended42_1:
        case CaseTag::Extended42_2: {
            v.reduced = reduce(alg, A).output;
            v.h = h_lower_bound(alg, A);
            v.h_is_lower_bound = true;
            if (*v.h > 0) {
                v.status = SphereVerdict::Status::Obstructed;
                v.reason = "h-positive";
                return v;
            }
            if (v.reduced[1] == 0 && v.reduced[0] >= 1) {
                v.status = SphereVerdict::Status::AdmissiblePattern;
                v.pattern = "aF";
            } else {
                v.status = SphereVerdict::Status::Unknown;
                v.note = "not constrained at tilde_b1 >= 4 beyond h_{c0}";
            }
            return v;
        }
        case CaseTag::Unsupported: {
            v.status = SphereVerdict::Status::Unknown;
            v.note = "algebra outside the supported case list";
            return v;
        }
    }
    throw InternalError("sphere_check: unreachable");
}

}  // namespace genusbound
