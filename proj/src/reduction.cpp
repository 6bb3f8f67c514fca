#include "genusbound/reduction.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <vector>

namespace genusbound {

namespace {

bool is_u_type(const IntersectionForm& form) {
    return form.tag.kind == FormKind::Hyperbolic || form.tag.kind == FormKind::Even;
}

bool is_even_one(const IntersectionForm& form) {
    return form.tag.kind == FormKind::Even && form.tag.param == 1;
}

void require_e8_block_vector(const IntersectionForm& form, const Vec& v, const char* what) {
    if (!is_even_one(form))
        throw InvalidArgumentError(std::string(what) + ": form must be Even(1)");
    if (v.size() != form.rank)
        throw RankMismatchError(std::string(what) + ": wrong length");
    if (v[0] != 0 || v[1] != 0)
        throw InvalidArgumentError(std::string(what) + ": class lies outside the -E8 summand");
}

Int odd_n(const IntersectionForm& form) { return form.rank - 1; }

}  // namespace

Vec apply_move(const AlgebraDescriptor& alg, const ReductionMove& move, const Vec& A) {
    const IntersectionForm& form = alg.form;
    if (A.size() != form.rank) throw RankMismatchError("apply_move: rank mismatch");
    switch (move.kind) {
        case ReductionMove::Kind::Negate: {
            Vec out(A.size());
            for (Eigen::Index k = 0; k < A.size(); ++k) out[k] = checked_neg(A[k]);
            return out;
        }
        case ReductionMove::Kind::SwapFB: {
            if (!is_u_type(form))
                throw InvalidArgumentError("SwapFB: form has no F,B hyperbolic pair");
            if (!alg.t_trivial())
                throw InvalidArgumentError("SwapFB: not an isometry preserving Im T");
            Vec out = A;
            std::swap(out[0], out[1]);
            return out;
        }
        case ReductionMove::Kind::ReflectE: {
            if (form.tag.kind != FormKind::Odd)
                throw InvalidArgumentError("ReflectE: form is not Odd(n)");
            if (move.i < 1 || move.i > odd_n(form))
                throw InvalidArgumentError("ReflectE: index out of range");
            Vec out = A;
            out[move.i] = checked_neg(out[move.i]);
            return out;
        }
        case ReductionMove::Kind::PermuteE: {
            if (form.tag.kind != FormKind::Odd)
                throw InvalidArgumentError("PermuteE: form is not Odd(n)");
            if (move.i < 1 || move.j < 1 || move.i > odd_n(form) || move.j > odd_n(form) ||
                move.i == move.j)
                throw InvalidArgumentError("PermuteE: bad index pair");
            Vec out = A;
            std::swap(out[move.i], out[move.j]);
            return out;
        }
        case ReductionMove::Kind::CremonaReflect: {
            if (form.tag.kind != FormKind::Odd)
                throw InvalidArgumentError("CremonaReflect: form is not Odd(n)");
            Int n = odd_n(form);
            if (n < 2) throw InvalidArgumentError("CremonaReflect: needs n >= 2");
            Vec w = Vec::Zero(form.rank);
            if (n >= 3) {
                // reflection along H-E1-E2-E3, norm -2: x -> x + (x.w)w
                w[0] = 1;
                w[1] = w[2] = w[3] = -1;
                Int t = pair(form, A, w);
                Vec out = A;
                for (Eigen::Index k = 0; k < A.size(); ++k)
                    out[k] = checked_add(out[k], checked_mul(t, w[k]));
                return out;
            }
            // n = 2: reflection along 2H-E1-E2, norm +2: x -> x - (x.w)w
            w[0] = 2;
            w[1] = w[2] = -1;
            Int t = pair(form, A, w);
            Vec out = A;
            for (Eigen::Index k = 0; k < A.size(); ++k)
                out[k] = checked_sub(out[k], checked_mul(t, w[k]));
            return out;
        }
        case ReductionMove::Kind::EOmega:
            return e_omega(form, move.omega, A);
    }
    throw InvalidArgumentError("apply_move: unknown move");
}

Vec ReductionTrace::replay(const AlgebraDescriptor& alg) const {
    Vec cur = input;
    for (const auto& m : moves) cur = apply_move(alg, m, cur);
    return cur;
}

Vec e_omega(const IntersectionForm& form, const Vec& omega, const Vec& A) {
    require_e8_block_vector(form, omega, "e_omega");
    if (A.size() != form.rank) throw RankMismatchError("e_omega: rank mismatch");
    Int ww = norm(form, omega);  // even and <= 0 in the -E8 summand
    if (ww % 2 != 0) throw InternalError("e_omega: odd norm in an even lattice");
    Int n_omega = ww / 2;
    Int xi_dot_omega = pair(form, A, omega);  // F,B pair to zero with omega
    Int b = A[1];
    Vec out = A;
    out[0] = checked_sub(checked_sub(A[0], checked_mul(b, n_omega)), xi_dot_omega);
    for (Int k = 2; k < form.rank; ++k)
        out[k] = checked_add(out[k], checked_mul(b, omega[k]));
    return out;
}

// ---------------------------------------------------------------------------
// Wall vector search.
//
// w qualifies iff E8norm(xi + b*w) < 2b^2, where E8norm is the positive
// definite norm of the E8 block (the vanishing branch is norm 0). Dividing
// by b^2, the qualifying w are the lattice points within squared distance 2
// of the rational point -xi/b, so they are enumerated exactly by coordinate
// recursion over an LDL^T split of the E8 Gram matrix, with all comparisons
// in exact rational arithmetic.
// ---------------------------------------------------------------------------
namespace {

using Wide = __int128;

Wide wide_gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct Frac {
    Wide num = 0;
    Wide den = 1;

    Frac() = default;
    Frac(Wide n, Wide d) : num(n), den(d) {
        if (den == 0) throw InternalError("Frac: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Wide g = wide_gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    static Frac of(Int n) { return Frac(n, 1); }

    Frac operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
    Frac operator-(const Frac& o) const { return Frac(num * o.den - o.num * den, den * o.den); }
    Frac operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }
    Frac operator/(const Frac& o) const { return Frac(num * o.den, den * o.num); }
    bool operator<(const Frac& o) const { return num * o.den < o.num * den; }
    bool operator<=(const Frac& o) const { return num * o.den <= o.num * den; }
    bool negative() const { return num < 0; }
};

struct E8Ldl {
    std::array<Frac, 8> d;
    std::array<std::array<Frac, 8>, 8> l;  // unit lower triangular
};

const E8Ldl& e8_ldl() {
    static const E8Ldl split = [] {
        Mat e8 = e8_gram();
        E8Ldl s;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) s.l[i][j] = Frac::of(i == j ? 1 : 0);
        for (int j = 0; j < 8; ++j) {
            Frac dj = Frac::of(e8(j, j));
            for (int k = 0; k < j; ++k) dj = dj - s.l[j][k] * s.l[j][k] * s.d[k];
            s.d[j] = dj;
            for (int i = j + 1; i < 8; ++i) {
                Frac v = Frac::of(e8(i, j));
                for (int k = 0; k < j; ++k) v = v - s.l[i][k] * s.l[j][k] * s.d[k];
                s.l[i][j] = v / dj;
            }
        }
        return s;
    }();
    return split;
}

// All integer x with (x - t)^T E8 (x - t) < limit, via backward coordinate
// recursion: the quadratic splits as sum_k d_k (x_k - t_k + sum_{j>k} l_jk
// (x_j - t_j))^2.
void enumerate_near(const std::array<Frac, 8>& t, const Frac& limit,
                    std::vector<std::array<Int, 8>>& out) {
    const E8Ldl& s = e8_ldl();
    std::array<Int, 8> x{};
    std::array<Frac, 8> diff{};  // x_j - t_j for fixed coordinates

    auto center = [&](int k) {
        Frac c = t[k];
        for (int j = k + 1; j < 8; ++j) c = c - s.l[j][k] * diff[j];
        return c;  // y_k = x_k - c, contribution d_k * y_k^2
    };

    auto rec = [&](auto&& self, int k, Frac used) -> void {
        if (k < 0) {
            out.push_back(x);
            return;
        }
        Frac room = limit - used;
        if (room <= Frac::of(0)) return;
        Frac c = center(k);
        auto fits = [&](Int v) {
            Frac y = Frac::of(v) - c;
            return s.d[k] * y * y < room;
        };
        Int mid = static_cast<Int>(c.num >= 0 ? c.num / c.den : -((-c.num + c.den - 1) / c.den));
        for (Int v = mid; fits(v); --v) {
            x[k] = v;
            diff[k] = Frac::of(v) - t[k];
            Frac y = Frac::of(v) - c;
            self(self, k - 1, used + s.d[k] * y * y);
        }
        for (Int v = mid + 1; fits(v); ++v) {
            x[k] = v;
            diff[k] = Frac::of(v) - t[k];
            Frac y = Frac::of(v) - c;
            self(self, k - 1, used + s.d[k] * y * y);
        }
    };
    rec(rec, 7, Frac::of(0));
}

}  // namespace

Vec wall_vector(const IntersectionForm& form, const Vec& xi, Int b) {
    require_e8_block_vector(form, xi, "wall_vector");
    if (b == 0) throw PreconditionError("wall_vector: b must be nonzero");

    std::array<Frac, 8> t;
    for (int k = 0; k < 8; ++k) t[k] = Frac(-xi[2 + k], b);

    std::vector<std::array<Int, 8>> candidates;
    enumerate_near(t, Frac::of(2), candidates);
    if (candidates.empty())
        throw InternalError("wall_vector: no qualifying vector (Wall's lemma violated)");

    auto radius = [](const std::array<Int, 8>& w) {
        Int r = 1;
        for (Int v : w) r = std::max(r, std::abs(v));
        return r;
    };
    const std::array<Int, 8>* best = &candidates[0];
    for (const auto& w : candidates) {
        Int rw = radius(w), rb = radius(*best);
        if (rw < rb || (rw == rb && std::lexicographical_compare(w.begin(), w.end(),
                                                                 best->begin(), best->end())))
            best = &w;
    }
    Vec out = Vec::Zero(form.rank);
    for (int k = 0; k < 8; ++k) out[2 + k] = (*best)[k];

    // The dichotomy the enumeration promises, checked in plain integers.
    Vec y = xi;
    for (int k = 0; k < 8; ++k) y[2 + k] = checked_add(y[2 + k], checked_mul(b, out[2 + k]));
    Int q = norm(form, y);
    if (!(is_zero(y) || (q != 0 && std::abs(q) < checked_mul(2, checked_mul(b, b)))))
        throw InternalError("wall_vector: enumerated vector fails the dichotomy");
    return out;
}

bool is_reduced(const AlgebraDescriptor& alg, const Vec& A) {
    if (A.size() != alg.form.rank) throw RankMismatchError("is_reduced: rank mismatch");
    switch (classify_case(alg)) {
        case CaseTag::Case1:
            return A[0] >= std::abs(A[1]);
        case CaseTag::Case2: {
            Int a = A[0], b = A[1];
            bool xi_zero = true;
            for (Int k = 2; k < alg.form.rank; ++k) xi_zero = xi_zero && A[k] == 0;
            if (b == 0) return xi_zero && a >= 0;
            Vec xi = A;
            xi[0] = xi[1] = 0;
            Int minus_xi_sq = checked_neg(norm(alg.form, xi));
            return a >= std::abs(b) && checked_mul(4, checked_mul(b, b)) > minus_xi_sq;
        }
        case CaseTag::Case3:
        case CaseTag::Case5:
        case CaseTag::Extended42_1:
        case CaseTag::Extended42_2:
            return A[0] > 0 || (A[0] == 0 && A[1] >= 0);
        case CaseTag::Case4: {
            Int n = alg.form.rank - 1;
            if (A[0] < 0) return false;
            for (Int i = 1; i <= n; ++i)
                if (A[i] > 0) return false;  // b_i = -A[i] must be >= 0
            for (Int i = 1; i + 1 <= n; ++i)
                if (-A[i] < -A[i + 1]) return false;  // sorted descending
            Int top = 0;
            for (Int i = 1; i <= std::min<Int>(3, n); ++i) top = checked_add(top, -A[i]);
            return A[0] >= top;
        }
        case CaseTag::Unsupported:
            throw UnsupportedCaseError("is_reduced: unsupported case");
    }
    throw InternalError("is_reduced: unreachable");
}

namespace {

struct TraceBuilder {
    const AlgebraDescriptor& alg;
    ReductionTrace trace;
    Vec cur;

    TraceBuilder(const AlgebraDescriptor& a, const Vec& input) : alg(a), cur(input) {
        trace.input = input;
    }
    void apply(const ReductionMove& m) {
        cur = apply_move(alg, m, cur);
        trace.moves.push_back(m);
    }
    ReductionTrace finish() {
        trace.output = cur;
        if (!is_reduced(alg, trace.output))
            throw InternalError("reduce: output failed the reduced check");
        return std::move(trace);
    }
};

void reduce_case1(TraceBuilder& tb) {
    if (tb.cur[0] < 0 || tb.cur[1] < 0) tb.apply(ReductionMove::negate());
    if (tb.cur[0] < tb.cur[1]) tb.apply(ReductionMove::swap_fb());
}

void reduce_sign_only(TraceBuilder& tb) {
    if (tb.cur[0] < 0 || (tb.cur[0] == 0 && tb.cur[1] < 0))
        tb.apply(ReductionMove::negate());
}

void reduce_case4(TraceBuilder& tb) {
    const Int n = tb.alg.form.rank - 1;
    Int budget = 10;
    budget = checked_add(budget, checked_mul(10, std::abs(tb.cur[0])));
    for (Int i = 1; i <= n; ++i) budget = checked_add(budget, checked_mul(10, std::abs(tb.cur[i])));

    while (!is_reduced(tb.alg, tb.cur)) {
        if (static_cast<Int>(tb.trace.moves.size()) > budget)
            throw InternalError("reduce: move ceiling exceeded in Case 4");
        if (tb.cur[0] < 0) {
            tb.apply(ReductionMove::negate());
            continue;
        }
        bool flipped = false;
        for (Int i = 1; i <= n; ++i) {
            if (tb.cur[i] > 0) {
                tb.apply(ReductionMove::reflect_e(i));
                flipped = true;
            }
        }
        if (flipped) continue;
        // selection sort on b_i = -A[i], descending
        bool swapped = false;
        for (Int i = 1; i <= n; ++i) {
            Int best = i;
            for (Int j = i + 1; j <= n; ++j)
                if (-tb.cur[j] > -tb.cur[best]) best = j;
            if (best != i) {
                tb.apply(ReductionMove::permute_e(i, best));
                swapped = true;
            }
        }
        if (swapped) continue;
        Int top = 0;
        for (Int i = 1; i <= std::min<Int>(3, n); ++i) top = checked_add(top, -tb.cur[i]);
        if (tb.cur[0] >= top) continue;  // loop condition will see it as reduced
        if (n < 2) throw InternalError("reduce: nonreduced Case 4 class with n <= 1");
        tb.apply(ReductionMove::cremona());
    }
}

void reduce_case2(TraceBuilder& tb) {
    const IntersectionForm& form = tb.alg.form;
    Int last_measure = -1;
    for (int guard = 0; guard < 10000; ++guard) {
        if (is_reduced(tb.alg, tb.cur)) return;
        Int a = tb.cur[0], b = tb.cur[1];
        bool xi_zero = true;
        for (Int k = 2; k < form.rank; ++k) xi_zero = xi_zero && tb.cur[k] == 0;

        if (b == 0 && xi_zero) {
            tb.apply(ReductionMove::negate());  // a < 0, else it were reduced
            continue;
        }
        if (a == 0 && xi_zero) {
            tb.apply(ReductionMove::swap_fb());
            continue;
        }
        if ((b == 0 && !xi_zero) || (a == 0 && !xi_zero))
            throw InternalError("reduce: Case 2 state with negative square");
        if (a < 0) {
            tb.apply(ReductionMove::negate());
            continue;
        }
        if (a < b) {
            tb.apply(ReductionMove::swap_fb());
            continue;
        }
        // a >= b > 0 and the class is not reduced, so Wall's lemma applies.
        Vec xi = tb.cur;
        xi[0] = xi[1] = 0;
        Int measure = std::min(a, b);
        if (last_measure >= 0 && measure >= last_measure)
            throw InternalError("reduce: Case 2 measure failed to decrease");
        last_measure = measure;
        tb.apply(ReductionMove::e_omega_move(wall_vector(form, xi, b)));
    }
    throw InternalError("reduce: Case 2 iteration ceiling exceeded");
}

}  // namespace

ReductionTrace reduce(const AlgebraDescriptor& alg, const Vec& A) {
    if (A.size() != alg.form.rank) throw RankMismatchError("reduce: rank mismatch");
    if (norm(alg.form, A) < 0) throw PreconditionError("reduce: A.A < 0");

    TraceBuilder tb(alg, A);
    switch (classify_case(alg)) {
        case CaseTag::Case1:
            reduce_case1(tb);
            break;
        case CaseTag::Case2:
            reduce_case2(tb);
            break;
        case CaseTag::Case3:
        case CaseTag::Case5:
        case CaseTag::Extended42_1:
        case CaseTag::Extended42_2:
            reduce_sign_only(tb);
            break;
        case CaseTag::Case4:
            reduce_case4(tb);
            break;
        case CaseTag::Unsupported:
            throw UnsupportedCaseError("reduce: unsupported case");
    }
    return tb.finish();
}

}  // namespace genusbound
