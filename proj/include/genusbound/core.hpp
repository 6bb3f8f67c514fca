#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace genusbound {

// All lattice arithmetic is exact 64-bit integer arithmetic. Anything that
// would wrap throws OverflowError instead.
using Int = std::int64_t;

using Vec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 64-bit arithmetic would wrap. Distinct type so callers can tell a
/// capacity failure from a bad input.
struct OverflowError : Error {
    using Error::Error;
};

/// Malformed parameters (negative rank, bad tag, unparsable class, ...).
struct InvalidArgumentError : Error {
    using Error::Error;
};

/// A class whose length does not match the form it is paired against.
struct RankMismatchError : Error {
    using Error::Error;
};

/// A stated precondition does not hold (A.A < 0, b = 0, non-adjunction c, ...).
struct PreconditionError : Error {
    using Error::Error;
};

/// The algebra falls outside the supported case list.
struct UnsupportedCaseError : Error {
    using Error::Error;
};

/// An internal consistency guard fired. Always a bug.
struct InternalError : Error {
    using Error::Error;
};

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

/// gcd of all coefficients; 0 for the zero vector.
inline Int content(const Vec& v) {
    Int g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        Int x = v[i] < 0 ? checked_neg(v[i]) : v[i];
        g = std::gcd(g, x);
    }
    return g;
}

inline bool is_zero(const Vec& v) { return v.isZero(); }

/// true when v < w in coefficient-wise lexicographic order.
inline bool lex_less(const Vec& v, const Vec& w) {
    for (Eigen::Index i = 0; i < v.size() && i < w.size(); ++i) {
        if (v[i] != w[i]) return v[i] < w[i];
    }
    return v.size() < w.size();
}

/// Sign-canonical representative of {v, -v}: first nonzero coefficient
/// positive. The zero vector is its own representative.
inline Vec sign_canonical(const Vec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v[i] != 0) return v[i] > 0 ? v : Vec(-v);
    }
    return v;
}

inline std::string to_string(const Vec& v) {
    std::string s = "[";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    s += "]";
    return s;
}

}  // namespace genusbound
