#ifndef CUBIC_FQ_HPP
#define CUBIC_FQ_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "cubic/numeric.hpp"

namespace cubic {

// F_{p^k} for k <= 3, as F_p[t]/(phi) with phi monic of degree k. Elements are
// coordinate triples mod p; only the first k coordinates are used. p < 2^31.
struct Fq {
    std::uint64_t p = 0;
    int k = 1;
    std::array<std::uint64_t, 3> phi{};  // phi = t^k + phi[k-1] t^{k-1} + ... + phi[0]

    Int order() const {  // q = p^k
        Int q = 1;
        for (int i = 0; i < k; ++i) q *= p;
        return q;
    }
};

using FqEl = std::array<std::uint64_t, 3>;

FqEl fq_zero();
FqEl fq_one();
bool fq_is_zero(const FqEl& a);
FqEl fq_from_u64(const Fq& F, std::uint64_t v);
FqEl fq_add(const Fq& F, const FqEl& a, const FqEl& b);
FqEl fq_sub(const Fq& F, const FqEl& a, const FqEl& b);
FqEl fq_neg(const Fq& F, const FqEl& a);
FqEl fq_mul(const Fq& F, const FqEl& a, const FqEl& b);
FqEl fq_pow(const Fq& F, FqEl a, Int e);
FqEl fq_inv(const Fq& F, const FqEl& a);

// Monic irreducible cubic t^3 + c2 t^2 + c1 t + c0 over F_p (deterministic).
std::array<std::uint64_t, 3> irreducible_cubic_mod_p(std::uint64_t p);

// Dense polynomial over F_q, c[i] the coefficient of U^i, trimmed.
struct FqPoly {
    std::vector<FqEl> c;
    int degree() const { return static_cast<int>(c.size()) - 1; }
};

FqPoly fqp_trim(FqPoly f);
FqEl fqp_eval(const Fq& F, const FqPoly& f, const FqEl& x);
FqPoly fqp_derivative(const Fq& F, const FqPoly& f);
FqPoly fqp_mul(const Fq& F, const FqPoly& a, const FqPoly& b);
FqPoly fqp_mod(const Fq& F, FqPoly a, const FqPoly& m);
FqPoly fqp_gcd(const Fq& F, FqPoly a, FqPoly b);
// x^e mod m
FqPoly fqp_powmod_x(const Fq& F, const Int& e, const FqPoly& m);

// Distinct roots in F_q of a polynomial of degree <= 3 (not identically 0).
std::vector<FqEl> fq_roots(const Fq& F, const FqPoly& f);

}  // namespace cubic

#endif
