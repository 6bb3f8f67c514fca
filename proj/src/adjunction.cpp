#include "genusbound/adjunction.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <vector>

namespace genusbound {

AdjunctionVerdict is_adjunction_class(const AlgebraDescriptor& alg, const Vec& c) {
    if (c.size() != alg.form.rank)
        throw RankMismatchError("is_adjunction_class: rank mismatch");
    AdjunctionVerdict v;
    if (!is_characteristic(alg.form, c)) return v;
    Int cc = norm(alg.form, c);
    Int sigma = alg.form.sigma();
    v.type_one = cc >= checked_add(sigma, 8);
    if (!alg.t_trivial()) {
        v.type_two = cc >= two_chi_three_sigma(alg) && pair(alg.form, c, alg.f()) != 0;
    }
    return v;
}

Int c_genus(const AlgebraDescriptor& alg, const Vec& c, const Vec& A) {
    if (A.size() != alg.form.rank || c.size() != alg.form.rank)
        throw RankMismatchError("c_genus: rank mismatch");
    if (!is_adjunction_class(alg, c).any())
        throw PreconditionError("c_genus: c is not an adjunction class");
    Int aa = norm(alg.form, A);
    if (aa < 0) throw PreconditionError("c_genus: A.A < 0");
    if (is_zero(A)) return 0;
    Int ca = pair(alg.form, c, A);
    Int diff = checked_sub(aa, std::abs(ca));
    if (diff % 2 != 0) throw InternalError("c_genus: odd defect for characteristic c");
    return checked_add(1, diff / 2);
}

bool HWitness::consistent(const AlgebraDescriptor& alg, const Vec& A) const {
    return is_adjunction_class(alg, witness).any() && c_genus(alg, witness, A) == value;
}

Int default_bound(const Vec& A) {
    Int m = 0;
    for (Eigen::Index i = 0; i < A.size(); ++i) m = std::max(m, std::abs(A[i]));
    return std::max<Int>(checked_add(checked_mul(3, m), 5), 9);
}

namespace {

// ---------------------------------------------------------------------------
// Generic engine: depth-first scan of the box in lexicographic order.
//
// Characteristic vectors form a fixed parity class per coordinate, so each
// coordinate steps by 2. Only sign-canonical representatives (leading
// coefficient positive) are visited. Two sound prunings:
//   - value: the reachable interval of c.A cannot beat the best |c.A| so far,
//   - feasibility: no completion can reach the smallest adjunction norm
//     threshold, using an exact zero bound for trailing negative semidefinite
//     blocks.
// ---------------------------------------------------------------------------
class BoxSearch {
  public:
    BoxSearch(const AlgebraDescriptor& alg, const Vec& A, Int bound)
        : alg_(alg), form_(alg.form), A_(A), bound_(bound), r_(alg.form.rank) {
        aa_ = norm(form_, A_);
        a_zero_ = is_zero(A_);
        t1_ = checked_add(form_.sigma(), 8);
        has_t2_ = !alg_.t_trivial();
        t2_ = has_t2_ ? two_chi_three_sigma(alg_) : 0;
        t_min_ = has_t2_ ? std::min(t1_, t2_) : t1_;

        auto parity = characteristic_parities(form_);
        lo_.resize(r_);
        hi_.resize(r_);
        for (Int i = 0; i < r_; ++i) {
            Int lo = -bound_;
            if (((lo % 2) + 2) % 2 != parity[i]) ++lo;
            Int hi = bound_;
            if (((hi % 2) + 2) % 2 != parity[i]) --hi;
            lo_[i] = lo;
            hi_[i] = hi;  // hi < lo means no admissible value at all
        }

        wA_.resize(r_);
        wF_.resize(r_);
        for (Int j = 0; j < r_; ++j) {
            Int sa = 0, sf = 0;
            for (Int i = 0; i < r_; ++i) {
                sa = checked_add(sa, checked_mul(form_.gram(j, i), A_[i]));
                if (has_t2_) sf = checked_add(sf, checked_mul(form_.gram(j, i), alg_.f()[i]));
            }
            wA_[j] = sa;
            wF_[j] = sf;
        }

        suf_lo_.assign(r_ + 1, 0);
        suf_hi_.assign(r_ + 1, 0);
        for (Int j = r_ - 1; j >= 0; --j) {
            Int a = checked_mul(lo_[j], wA_[j]);
            Int b = checked_mul(hi_[j], wA_[j]);
            suf_lo_[j] = checked_add(suf_lo_[j + 1], std::min(a, b));
            suf_hi_[j] = checked_add(suf_hi_[j + 1], std::max(a, b));
        }

        tail_max_.assign(r_ + 1, 0);
        for (Int d = r_ - 1; d >= 0; --d) {
            Int len = r_ - d;
            Mat block = form_.gram.block(d, d, len, len);
            if (signature_of(block).b_plus == 0) {
                tail_max_[d] = 0;  // negative semidefinite tail peaks at c = 0
            } else {
                Int m = 0;
                for (Int i = d; i < r_; ++i)
                    for (Int j = d; j < r_; ++j)
                        m = checked_add(m, std::abs(checked_mul(
                                               form_.gram(i, j),
                                               checked_mul(std::max(std::abs(lo_[i]), std::abs(hi_[i])),
                                                           std::max(std::abs(lo_[j]), std::abs(hi_[j]))))));
                tail_max_[d] = m;
            }
        }

        c_.setZero(r_);
        s_.assign(r_, 0);
    }

    std::optional<HWitness> run() {
        for (Int i = 0; i < r_; ++i)
            if (lo_[i] > hi_[i]) return std::nullopt;
        descend(0, 0, 0, 0, true);
        if (!found_) return std::nullopt;
        HWitness w;
        w.value = a_zero_ ? 0 : checked_add(1, checked_sub(aa_, best_abs_) / 2);
        w.witness = best_c_;
        w.bound = bound_;
        return w;
    }

  private:
    void descend(Int d, Int qq, Int dot_a, Int dot_f, bool all_zero) {
        if (d == r_) {
            bool t1 = qq >= t1_;
            bool t2 = has_t2_ && qq >= t2_ && dot_f != 0;
            if (!t1 && !t2) return;
            if (a_zero_) {
                if (!found_) {
                    found_ = true;
                    best_c_ = c_;
                }
                return;
            }
            Int av = std::abs(dot_a);
            if (!found_ || av < best_abs_) {
                found_ = true;
                best_abs_ = av;
                best_c_ = c_;
            }
            return;
        }
        if (found_) {
            if (a_zero_) return;  // everything ties at h = 0
            Int lo = checked_add(dot_a, suf_lo_[d]);
            Int hi = checked_add(dot_a, suf_hi_[d]);
            Int min_abs = lo > 0 ? lo : (hi < 0 ? -hi : 0);
            if (min_abs >= best_abs_) return;
        }
        // Best possible completion of c.c from here.
        Int cross = 0;
        for (Int j = d; j < r_; ++j) {
            Int a = checked_mul(2, checked_mul(lo_[j], s_[j]));
            Int b = checked_mul(2, checked_mul(hi_[j], s_[j]));
            cross = checked_add(cross, std::max(a, b));
        }
        if (checked_add(qq, checked_add(cross, tail_max_[d])) < t_min_) return;

        Int start = lo_[d];
        if (all_zero && start < 0) {
            // Canonical representatives only: leading coefficient positive.
            start = (lo_[d] % 2 == 0) ? 0 : 1;
        }
        for (Int v = start; v <= hi_[d]; v += 2) {
            c_[d] = v;
            Int qq2 = checked_add(qq, checked_add(checked_mul(2, checked_mul(v, s_[d])),
                                                  checked_mul(v, checked_mul(v, form_.gram(d, d)))));
            Int dot_a2 = checked_add(dot_a, checked_mul(v, wA_[d]));
            Int dot_f2 = has_t2_ ? checked_add(dot_f, checked_mul(v, wF_[d])) : 0;
            if (v != 0)
                for (Int j = 0; j < r_; ++j)
                    s_[j] = checked_add(s_[j], checked_mul(v, form_.gram(d, j)));
            descend(d + 1, qq2, dot_a2, dot_f2, all_zero && v == 0);
            if (v != 0)
                for (Int j = 0; j < r_; ++j)
                    s_[j] = checked_sub(s_[j], checked_mul(v, form_.gram(d, j)));
        }
        c_[d] = 0;
    }

    const AlgebraDescriptor& alg_;
    const IntersectionForm& form_;
    Vec A_;
    Int bound_, r_, aa_;
    bool a_zero_;
    Int t1_, t2_, t_min_;
    bool has_t2_;
    std::vector<Int> lo_, hi_, wA_, wF_, suf_lo_, suf_hi_, tail_max_, s_;
    Vec c_;
    bool found_ = false;
    Int best_abs_ = 0;
    Vec best_c_;
};

// ---------------------------------------------------------------------------
// Diagonal engine: Odd(n) with trivial T. Adjunction classes are exactly the
// all-odd vectors (k, e) with k^2 - sum e_i^2 >= sigma + 8, so for each k the
// feasible pairing sums form a knapsack: a min-budget table over the E
// coordinates answers "is sum s reachable with sum of squares <= B" exactly.
// Returns the same optimum and witness the box scan would.
// ---------------------------------------------------------------------------
class DiagonalSearch {
  public:
    DiagonalSearch(const AlgebraDescriptor& alg, const Vec& A, Int bound)
        : form_(alg.form), A_(A), bound_(bound), n_(alg.form.rank - 1) {
        aa_ = norm(form_, A_);
        a_zero_ = is_zero(A_);
        beta_ = bound_ % 2 == 0 ? bound_ - 1 : bound_;
        threshold_ = checked_add(form_.sigma(), 8);
    }

    std::optional<HWitness> run() {
        if (beta_ < 1) return std::nullopt;
        build_table();

        const Int NONE = std::numeric_limits<Int>::max();
        Int best_abs = NONE;
        for (Int k = 1; k <= beta_; k += 2) {
            Int budget = checked_sub(checked_mul(k, k), threshold_);
            if (budget < n_) continue;  // every e_i is odd, so >= n in squares
            if (a_zero_) {
                best_abs = 0;
                break;
            }
            Int base = checked_mul(k, A_[0]);
            for (Int s = -smax_; s <= smax_; ++s) {
                if (min_budget_[0][idx(s)] > budget) continue;
                best_abs = std::min(best_abs, std::abs(checked_add(base, s)));
            }
        }
        if (best_abs == NONE) return std::nullopt;

        HWitness w;
        w.bound = bound_;
        w.value = a_zero_ ? 0 : checked_add(1, checked_sub(aa_, best_abs) / 2);
        w.witness = reconstruct(best_abs);
        return w;
    }

  private:
    Int idx(Int s) const { return s + smax_; }

    void build_table() {
        smax_ = 0;
        for (Int i = 1; i <= n_; ++i)
            smax_ = checked_add(smax_, checked_mul(std::abs(A_[i]), beta_));
        const Int INF = std::numeric_limits<Int>::max();
        min_budget_.assign(n_ + 1, std::vector<Int>(2 * smax_ + 1, INF));
        min_budget_[n_][idx(0)] = 0;
        for (Int i = n_ - 1; i >= 0; --i) {
            // level i covers E coordinates i+1 .. n (raw indices)
            Int ai = A_[i + 1];
            for (Int s = -smax_; s <= smax_; ++s) {
                Int cur = min_budget_[i + 1][idx(s)];
                if (cur == INF) continue;
                for (Int e = -beta_; e <= beta_; e += 2) {
                    Int s2 = s - e * ai;
                    if (s2 < -smax_ || s2 > smax_) continue;
                    Int b2 = cur + e * e;
                    if (b2 < min_budget_[i][idx(s2)]) min_budget_[i][idx(s2)] = b2;
                }
            }
        }
    }

    // Reachability of sum s over coordinates i+1..n within `budget`.
    bool reachable(Int level, Int s, Int budget) const {
        if (s < -smax_ || s > smax_) return false;
        return min_budget_[level][idx(s)] <= budget;
    }

    Vec reconstruct(Int best_abs) const {
        for (Int k = 1; k <= beta_; k += 2) {
            Int budget = checked_sub(checked_mul(k, k), threshold_);
            if (budget < n_) continue;
            Int base = checked_mul(k, A_[0]);
            if (!a_zero_) {
                bool hit = false;
                for (Int s = -smax_; s <= smax_ && !hit; ++s)
                    hit = reachable(0, s, budget) && std::abs(base + s) == best_abs;
                if (!hit) continue;
            }
            Vec c = Vec::Zero(n_ + 1);
            c[0] = k;
            Int used = 0;
            Int partial = base;
            bool ok = true;
            for (Int i = 1; i <= n_ && ok; ++i) {
                ok = false;
                for (Int e = -beta_; e <= beta_; e += 2) {
                    Int used2 = used + e * e;
                    if (used2 > budget) continue;
                    Int partial2 = partial - e * A_[i];
                    bool fits;
                    if (a_zero_) {
                        // any completion within budget will do
                        fits = reachable(i, 0, budget - used2) ||
                               any_reachable(i, budget - used2);
                    } else {
                        fits = reachable(i, best_abs - partial2, budget - used2) ||
                               reachable(i, -best_abs - partial2, budget - used2);
                    }
                    if (fits) {
                        c[i] = e;
                        used = used2;
                        partial = partial2;
                        ok = true;
                        break;
                    }
                }
            }
            if (ok) return c;
        }
        throw InternalError("diagonal search failed to reconstruct its witness");
    }

    bool any_reachable(Int level, Int budget) const {
        // min over all sums is the all-ones budget n - level
        return budget >= n_ - level;
    }

    const IntersectionForm& form_;
    Vec A_;
    Int bound_, n_, aa_, beta_, threshold_, smax_ = 0;
    bool a_zero_;
    std::vector<std::vector<Int>> min_budget_;
};

}  // namespace

std::optional<HWitness> h_bruteforce(const AlgebraDescriptor& alg, const Vec& A,
                                     Int bound) {
    if (A.size() != alg.form.rank)
        throw RankMismatchError("h_bruteforce: rank mismatch");
    if (bound < 1) throw InvalidArgumentError("h_bruteforce: bound must be >= 1");
    if (norm(alg.form, A) < 0) throw PreconditionError("h_bruteforce: A.A < 0");

    if (alg.form.tag.kind == FormKind::Odd && alg.t_trivial())
        return DiagonalSearch(alg, A, bound).run();
    return BoxSearch(alg, A, bound).run();
}

}  // namespace genusbound
