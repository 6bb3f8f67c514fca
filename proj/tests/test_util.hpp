#pragma once

#include "genusbound/adjunction.hpp"
#include "genusbound/closedform.hpp"
#include "genusbound/json_io.hpp"
#include "genusbound/reduction.hpp"
#include "genusbound/sphere.hpp"

#include <optional>
#include <random>

namespace genusbound::testutil {

inline Vec vec(std::initializer_list<Int> xs) {
    Vec v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (Int x : xs) v[i++] = x;
    return v;
}

inline AlgebraDescriptor case1_alg() { return make_algebra(make_form(FormTag::hyperbolic()), 0, 0); }
inline AlgebraDescriptor case2_alg() { return make_algebra(make_form(FormTag::even(1)), 0, 0); }
inline AlgebraDescriptor case3_alg() { return make_algebra(make_form(FormTag::hyperbolic()), 2, 2); }
inline AlgebraDescriptor case4_alg(Int n) { return make_algebra(make_form(FormTag::odd(n)), 0, 0); }
inline AlgebraDescriptor case5_alg() { return make_algebra(make_form(FormTag::vform()), 2, 2); }
inline AlgebraDescriptor ext1_alg(Int tb1 = 4) {
    return make_algebra(make_form(FormTag::hyperbolic()), tb1, tb1);
}
inline AlgebraDescriptor ext2_alg(Int tb1 = 4) {
    return make_algebra(make_form(FormTag::vform()), tb1, tb1);
}

/// Calls fn on every vector with coefficients in [-g, g], lexicographically.
template <typename Fn>
void for_each_box(Int rank, Int g, Fn&& fn) {
    Vec v = Vec::Constant(rank, -g);
    while (true) {
        fn(v);
        Int k = rank - 1;
        while (k >= 0 && v[k] == g) {
            v[k] = -g;
            --k;
        }
        if (k < 0) return;
        ++v[k];
    }
}

/// Literal reference oracle: full box enumeration straight from the
/// definitions, no pruning, no parity stepping. Only usable at small rank.
inline std::optional<HWitness> naive_h_box(const AlgebraDescriptor& alg, const Vec& A,
                                           Int bound) {
    std::optional<HWitness> best;
    Int aa = norm(alg.form, A);
    for_each_box(alg.form.rank, bound, [&](const Vec& c) {
        if (!is_adjunction_class(alg, c).any()) return;
        Int h = is_zero(A) ? 0 : 1 + (aa - std::abs(pair(alg.form, c, A))) / 2;
        Vec canon = sign_canonical(c);
        if (!best || h > best->value ||
            (h == best->value && lex_less(canon, best->witness))) {
            best = HWitness{h, canon, bound};
        }
    });
    return best;
}

/// Literal wall-vector search: boxes of radius 1, 2, ..., first qualifying
/// vector in lexicographic scan order. Reference for the enumeration-based
/// implementation; only usable when the answer has small coordinates.
inline std::optional<Vec> wall_vector_box(const IntersectionForm& form, const Vec& xi,
                                          Int b, Int rmax) {
    for (Int r = 1; r <= rmax; ++r) {
        std::optional<Vec> hit;
        for_each_box(8, r, [&](const Vec& w8) {
            if (hit) return;
            Int radius = 0;
            for (Int k = 0; k < 8; ++k) radius = std::max(radius, std::abs(w8[k]));
            if (radius < r && r > 1) return;  // inner points were scanned earlier
            Vec y = xi;
            for (Int k = 0; k < 8; ++k) y[2 + k] += b * w8[k];
            Int q = norm(form, y);
            if (is_zero(y) || (q != 0 && std::abs(q) < 2 * b * b)) {
                Vec w = Vec::Zero(form.rank);
                for (Int k = 0; k < 8; ++k) w[2 + k] = w8[k];
                hit = w;
            }
        });
        if (hit) return hit;
    }
    return std::nullopt;
}

/// A random word in the case's legal generators.
inline std::vector<ReductionMove> random_word(const AlgebraDescriptor& alg,
                                              std::mt19937_64& rng, int len) {
    std::vector<ReductionMove> word;
    CaseTag tag = classify_case(alg);
    Int n = alg.form.rank - 1;
    auto coin = [&](Int m) { return static_cast<Int>(rng() % static_cast<unsigned long>(m)); };
    for (int s = 0; s < len; ++s) {
        switch (tag) {
            case CaseTag::Case1:
                word.push_back(coin(2) ? ReductionMove::negate() : ReductionMove::swap_fb());
                break;
            case CaseTag::Case2: {
                Int pick = coin(3);
                if (pick == 0)
                    word.push_back(ReductionMove::negate());
                else if (pick == 1)
                    word.push_back(ReductionMove::swap_fb());
                else {
                    Vec omega = Vec::Zero(alg.form.rank);
                    Int nonzero = 1 + coin(2);
                    for (Int t = 0; t < nonzero; ++t)
                        omega[2 + coin(8)] = coin(2) ? 1 : -1;
                    word.push_back(ReductionMove::e_omega_move(omega));
                }
                break;
            }
            case CaseTag::Case3:
            case CaseTag::Case5:
            case CaseTag::Extended42_1:
            case CaseTag::Extended42_2:
                word.push_back(ReductionMove::negate());
                break;
            case CaseTag::Case4: {
                Int pick = coin(4);
                if (pick == 0 || n == 0)
                    word.push_back(ReductionMove::negate());
                else if (pick == 1)
                    word.push_back(ReductionMove::reflect_e(1 + coin(n)));
                else if (pick == 2 && n >= 2) {
                    Int i = 1 + coin(n), j = 1 + coin(n);
                    if (i == j) j = 1 + (i % n);
                    word.push_back(ReductionMove::permute_e(std::min(i, j), std::max(i, j)));
                } else if (n >= 2)
                    word.push_back(ReductionMove::cremona());
                else
                    word.push_back(ReductionMove::reflect_e(1));
                break;
            }
            case CaseTag::Unsupported:
                throw UnsupportedCaseError("random_word: unsupported case");
        }
    }
    return word;
}

inline Vec apply_word(const AlgebraDescriptor& alg, const std::vector<ReductionMove>& word,
                      Vec a) {
    for (const auto& m : word) a = apply_move(alg, m, a);
    return a;
}

/// A random reduced class with non-negative square for the case.
inline Vec random_reduced(const AlgebraDescriptor& alg, std::mt19937_64& rng) {
    CaseTag tag = classify_case(alg);
    auto coin = [&](Int m) { return static_cast<Int>(rng() % static_cast<unsigned long>(m)); };
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Vec a = Vec::Zero(alg.form.rank);
        switch (tag) {
            case CaseTag::Case1: {
                a[1] = coin(7);
                a[0] = a[1] + coin(7);
                break;
            }
            case CaseTag::Case2: {
                if (coin(4) == 0) {
                    a[0] = coin(9);
                } else {
                    a[1] = 1 + coin(5);
                    a[0] = a[1] + coin(6);
                    Int nonzero = coin(3);
                    for (Int t = 0; t < nonzero; ++t) a[2 + coin(8)] = coin(2) ? 1 : -1;
                }
                break;
            }
            case CaseTag::Case3:
            case CaseTag::Case5:
            case CaseTag::Extended42_1:
            case CaseTag::Extended42_2: {
                a[0] = coin(9);
                a[1] = coin(9) - (a[0] > 0 ? 2 : 0);
                if (a[0] == 0 && a[1] < 0) a[1] = -a[1];
                break;
            }
            case CaseTag::Case4: {
                Int n = alg.form.rank - 1;
                for (Int i = 1; i <= n; ++i) a[i] = -coin(5);
                std::sort(a.data() + 1, a.data() + 1 + n);  // ascending raw = descending b
                Int top = 0;
                for (Int i = 1; i <= std::min<Int>(3, n); ++i) top += -a[i];
                a[0] = top + coin(5);
                break;
            }
            case CaseTag::Unsupported:
                throw UnsupportedCaseError("random_reduced: unsupported case");
        }
        if (norm(alg.form, a) >= 0 && is_reduced(alg, a)) return a;
    }
    throw InternalError("random_reduced: no candidate found");
}

}  // namespace genusbound::testutil
