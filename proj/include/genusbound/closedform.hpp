#pragma once

#include "genusbound/adjunction.hpp"
#include "genusbound/reduction.hpp"

namespace genusbound {

enum class HSign { Negative, Zero, Positive };

std::string to_string(HSign s);

/// The canonical adjunction class c0 of the case, in the fixed basis:
///   Case1  2F+2B     Case2  0        Case3  2B
///   Case4  3H - sum E_i                Case5  F-2B
///   Extended42_1  2B                   Extended42_2  2B-F
Vec c_zero(const AlgebraDescriptor& alg);

/// h(A) in closed form for Cases 1-5. Reduces A first (Case 2 evaluates
/// (A.A+2)/2 on the class as given; its reduction is not unique and the
/// formula holds for every class of non-negative square). h(0) = 0.
Int h_closed(const AlgebraDescriptor& alg, const Vec& A);

/// h_{c0}(A) for the tilde_b1 >= 4 cases: a valid lower bound for the
/// minimal genus, not claimed to be the maximum over adjunction classes.
Int h_lower_bound(const AlgebraDescriptor& alg, const Vec& A);

/// Sign of h for Cases 1-5 by pattern-matching the reduced class against
/// the classified zero and negative families, cross-checked against the
/// sign of h_closed.
HSign sign_class(const AlgebraDescriptor& alg, const Vec& A);

}  // namespace genusbound
