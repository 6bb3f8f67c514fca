#pragma once

#include "genusbound/core.hpp"

#include <string>

namespace genusbound {

// Unimodular symmetric bilinear forms with b+ = 1, in a fixed basis that is
// part of the public contract:
//
//   Odd(n)      diag(1,-1,...,-1), basis H, E1, ..., En
//   Even(q)     U + q(-E8), basis F, B, then 8q coordinates of the -E8 blocks
//   Hyperbolic  U = [[0,1],[1,0]], basis F, B
//   Vform       V = [[0,1],[1,1]], basis F, B
//
// Classes are plain coefficient vectors in that basis.

enum class FormKind { Odd, Even, Hyperbolic, Vform };

struct FormTag {
    FormKind kind;
    Int param = 0;  // n for Odd, q for Even, unused otherwise

    static FormTag odd(Int n) { return {FormKind::Odd, n}; }
    static FormTag even(Int q) { return {FormKind::Even, q}; }
    static FormTag hyperbolic() { return {FormKind::Hyperbolic, 0}; }
    static FormTag vform() { return {FormKind::Vform, 0}; }

    bool operator==(const FormTag&) const = default;
};

std::string to_string(const FormTag& tag);

struct Signature {
    Int b_plus = 0;
    Int b_minus = 0;
    bool operator==(const Signature&) const = default;
};

/// Immutable once constructed; safe for concurrent reads.
struct IntersectionForm {
    FormTag tag;
    Int rank = 0;
    Mat gram;
    Signature sig;  // computed at construction by exact diagonalization

    Int sigma() const { return sig.b_plus - sig.b_minus; }

    /// true for U and U + q(-E8), where the basis starts with an F, B
    /// hyperbolic pair. V also starts with F, B but has B.B = 1.
    bool is_even_kind() const {
        return tag.kind == FormKind::Even || tag.kind == FormKind::Hyperbolic;
    }
};

/// The standard positive definite E8 Gram matrix (2 on the diagonal,
/// Dynkin-diagram adjacency off it, determinant 1).
Mat e8_gram();

IntersectionForm make_form(const FormTag& tag);

/// x.y under the form. Throws RankMismatchError on length mismatch and
/// OverflowError if the exact value would not fit.
Int pair(const IntersectionForm& form, const Vec& x, const Vec& y);

Int norm(const IntersectionForm& form, const Vec& x);

/// c is characteristic iff c.x = x.x (mod 2) for all x; by bilinearity it
/// is enough to test the basis vectors.
bool is_characteristic(const IntersectionForm& form, const Vec& c);

/// Exact signature of a symmetric integer matrix by congruence
/// diagonalization (Sylvester's law of inertia, never leaving the integers).
Signature signature_of(Mat m);

inline Signature signature(const IntersectionForm& form) { return form.sig; }

/// Determinant by fraction-free (Bareiss) elimination.
Int determinant(const Mat& m);

/// Coordinate parities every characteristic vector of the form must have:
/// c is characteristic iff c[i] = parity[i] (mod 2) for all i.
/// Solves G x = diag(G) over GF(2); unimodularity makes the solution unique.
std::vector<int> characteristic_parities(const IntersectionForm& form);

}  // namespace genusbound
