#ifndef CUBIC_INTROOTS_HPP
#define CUBIC_INTROOTS_HPP

#include <vector>

#include "cubic/numeric.hpp"

namespace cubic {

// Integer roots of monic polynomials of degree <= 3 with Int coefficients,
// found by exact sign-change bisection on the monotone pieces. No
// factorization of the constant term is needed, so huge coefficients are fine.

// Roots of U^2 + a1*U + a0 over the integers, sorted ascending.
std::vector<Int> monic_quadratic_integer_roots(const Int& a1, const Int& a0);

// Roots of U^3 + a2*U^2 + a1*U + a0 over the integers, sorted ascending,
// duplicates removed.
std::vector<Int> monic_cubic_integer_roots(const Int& a2, const Int& a1, const Int& a0);

}  // namespace cubic

#endif
