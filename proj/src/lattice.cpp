#include "genusbound/lattice.hpp"

#include "genusbound/frac.hpp"

#include <vector>

namespace genusbound {

std::string to_string(const FormTag& tag) {
    switch (tag.kind) {
        case FormKind::Odd: return "Odd(" + std::to_string(tag.param) + ")";
        case FormKind::Even: return "Even(" + std::to_string(tag.param) + ")";
        case FormKind::Hyperbolic: return "Hyperbolic";
        case FormKind::Vform: return "Vform";
    }
    return "?";
}

Mat e8_gram() {
    Mat g = Mat::Zero(8, 8);
    for (int i = 0; i < 8; ++i) g(i, i) = 2;
    // Chain 0-1-2-3-4-5-6 with node 7 attached to node 4: arms of length
    // 4, 2, 1 around the trivalent node, which is the E8 diagram.
    for (int i = 0; i < 6; ++i) {
        g(i, i + 1) = -1;
        g(i + 1, i) = -1;
    }
    g(4, 7) = -1;
    g(7, 4) = -1;
    return g;
}

IntersectionForm make_form(const FormTag& tag) {
    IntersectionForm form;
    form.tag = tag;
    switch (tag.kind) {
        case FormKind::Odd: {
            if (tag.param < 0) throw InvalidArgumentError("Odd(n) requires n >= 0");
            Int n = tag.param;
            form.rank = 1 + n;
            form.gram = Mat::Zero(form.rank, form.rank);
            form.gram(0, 0) = 1;
            for (Int i = 1; i <= n; ++i) form.gram(i, i) = -1;
            break;
        }
        case FormKind::Even: {
            if (tag.param < 0) throw InvalidArgumentError("Even(q) requires q >= 0");
            Int q = tag.param;
            form.rank = 2 + 8 * q;
            form.gram = Mat::Zero(form.rank, form.rank);
            form.gram(0, 1) = 1;
            form.gram(1, 0) = 1;
            Mat e8 = e8_gram();
            for (Int k = 0; k < q; ++k)
                form.gram.block(2 + 8 * k, 2 + 8 * k, 8, 8) = -e8;
            break;
        }
        case FormKind::Hyperbolic: {
            form.rank = 2;
            form.gram = Mat::Zero(2, 2);
            form.gram(0, 1) = 1;
            form.gram(1, 0) = 1;
            break;
        }
        case FormKind::Vform: {
            form.rank = 2;
            form.gram = Mat::Zero(2, 2);
            form.gram(0, 1) = 1;
            form.gram(1, 0) = 1;
            form.gram(1, 1) = 1;
            break;
        }
    }
    form.sig = signature_of(form.gram);
    if (form.sig.b_plus != 1)
        throw InternalError("constructed form does not have b+ = 1");
    if (form.sig.b_plus + form.sig.b_minus != form.rank)
        throw InternalError("constructed form is degenerate");
    return form;
}

static void check_rank(const IntersectionForm& form, const Vec& x, const char* what) {
    if (x.size() != form.rank)
        throw RankMismatchError(std::string(what) + ": class has length " +
                                std::to_string(x.size()) + " but form has rank " +
                                std::to_string(form.rank));
}

Int pair(const IntersectionForm& form, const Vec& x, const Vec& y) {
    check_rank(form, x, "pair");
    check_rank(form, y, "pair");
    Int acc = 0;
    for (Int i = 0; i < form.rank; ++i) {
        if (x[i] == 0) continue;
        Int row = 0;
        for (Int j = 0; j < form.rank; ++j) {
            Int g = form.gram(i, j);
            if (g == 0 || y[j] == 0) continue;
            row = checked_add(row, checked_mul(g, y[j]));
        }
        acc = checked_add(acc, checked_mul(x[i], row));
    }
    return acc;
}

Int norm(const IntersectionForm& form, const Vec& x) { return pair(form, x, x); }

bool is_characteristic(const IntersectionForm& form, const Vec& c) {
    check_rank(form, c, "is_characteristic");
    for (Int j = 0; j < form.rank; ++j) {
        Int cj = 0;
        for (Int i = 0; i < form.rank; ++i)
            cj = checked_add(cj, checked_mul(c[i], form.gram(i, j)));
        if (((cj - form.gram(j, j)) & 1) != 0) return false;
    }
    return true;
}

Signature signature_of(Mat m) {
    if (m.rows() != m.cols()) throw InvalidArgumentError("signature_of: matrix not square");
    if (m != m.transpose()) throw InvalidArgumentError("signature_of: matrix not symmetric");
    Int n = m.rows();
    std::vector<std::vector<Frac>> a(n, std::vector<Frac>(n));
    for (Int i = 0; i < n; ++i)
        for (Int j = 0; j < n; ++j) a[i][j] = Frac::of(m(i, j));

    Signature sig;
    for (Int start = 0; start < n; ++start) {
        // Find a nonzero diagonal pivot at or after `start`, creating one
        // from an off-diagonal entry if necessary (v_i <- v_i + v_j turns a
        // zero diagonal into 2*m(i,j)).
        Int p = -1;
        for (Int i = start; i < n; ++i) {
            if (!a[i][i].zero()) {
                p = i;
                break;
            }
        }
        if (p < 0) {
            bool found = false;
            for (Int i = start; i < n && !found; ++i) {
                for (Int j = i + 1; j < n && !found; ++j) {
                    if (!a[i][j].zero()) {
                        for (Int k = 0; k < n; ++k) a[i][k] = a[i][k] + a[j][k];
                        for (Int k = 0; k < n; ++k) a[k][i] = a[k][i] + a[k][j];
                        p = i;
                        found = true;
                    }
                }
            }
            if (!found) break;  // remaining block is zero
        }
        if (p != start) {
            for (Int k = 0; k < n; ++k) std::swap(a[p][k], a[start][k]);
            for (Int k = 0; k < n; ++k) std::swap(a[k][p], a[k][start]);
        }
        Frac d = a[start][start];
        if (d.negative())
            ++sig.b_minus;
        else
            ++sig.b_plus;
        // Schur complement of the pivot.
        for (Int r = start + 1; r < n; ++r) {
            Frac fr = a[r][start] / d;
            for (Int c = start + 1; c < n; ++c) a[r][c] = a[r][c] - fr * a[start][c];
        }
        for (Int r = start + 1; r < n; ++r) {
            a[r][start] = Frac::of(0);
            a[start][r] = Frac::of(0);
        }
    }
    return sig;
}

Int determinant(const Mat& m) {
    if (m.rows() != m.cols()) throw InvalidArgumentError("determinant: matrix not square");
    Int n = m.rows();
    if (n == 0) return 1;
    Mat a = m;
    Int sign = 1;
    Int prev = 1;
    for (Int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            Int p = -1;
            for (Int i = k + 1; i < n; ++i) {
                if (a(i, k) != 0) {
                    p = i;
                    break;
                }
            }
            if (p < 0) return 0;
            a.row(k).swap(a.row(p));
            sign = -sign;
        }
        for (Int i = k + 1; i < n; ++i) {
            for (Int j = k + 1; j < n; ++j) {
                Int num = checked_sub(checked_mul(a(i, j), a(k, k)),
                                      checked_mul(a(i, k), a(k, j)));
                if (num % prev != 0) throw InternalError("Bareiss divisibility failed");
                a(i, j) = num / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return checked_mul(sign, a(n - 1, n - 1));
}

std::vector<int> characteristic_parities(const IntersectionForm& form) {
    Int n = form.rank;
    // Augmented system over GF(2): G x = diag(G).
    std::vector<std::vector<int>> a(n, std::vector<int>(n + 1, 0));
    for (Int i = 0; i < n; ++i) {
        for (Int j = 0; j < n; ++j) a[i][j] = static_cast<int>(form.gram(i, j) & 1);
        a[i][n] = static_cast<int>(form.gram(i, i) & 1);
    }
    for (Int col = 0, row = 0; col < n; ++col) {
        Int p = -1;
        for (Int i = row; i < n; ++i) {
            if (a[i][col]) {
                p = i;
                break;
            }
        }
        if (p < 0) throw InternalError("gram matrix singular mod 2");
        std::swap(a[p], a[row]);
        for (Int i = 0; i < n; ++i) {
            if (i != row && a[i][col]) {
                for (Int j = col; j <= n; ++j) a[i][j] ^= a[row][j];
            }
        }
        ++row;
    }
    std::vector<int> parity(n, 0);
    for (Int i = 0; i < n; ++i) parity[i] = a[i][n];
    return parity;
}

}  // namespace genusbound
