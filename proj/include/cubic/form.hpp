#ifndef CUBIC_FORM_HPP
#define CUBIC_FORM_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cubic/numeric.hpp"

namespace cubic {

// Integral binary cubic form  x0*v1^3 + x1*v1^2*v2 + x2*v1*v2^2 + x3*v2^3.
// GL2(Z)-classes of these parameterize cubic rings over Z (Delone-Faddeev);
// the class discriminant equals the ring discriminant.
struct Form {
    Int x0, x1, x2, x3;

    friend bool operator==(const Form&, const Form&) = default;
    friend bool operator<(const Form& a, const Form& b) {
        if (a.x0 != b.x0) return a.x0 < b.x0;
        if (a.x1 != b.x1) return a.x1 < b.x1;
        if (a.x2 != b.x2) return a.x2 < b.x2;
        return a.x3 < b.x3;
    }
};

std::ostream& operator<<(std::ostream&, const Form&);

// "x0,x1,x2,x3" with decimal integers.
std::string to_csv(const Form&);
Form form_from_csv(const std::string&);

// Element of GL2(Z), acting on row vectors: (v1,v2) -> (v1,v2) * g.
struct Transform {
    Int a, b, c, d;
    Int det() const { return a * d - b * c; }
};

// Binary quadratic form p*v1^2 + q*v1*v2 + r*v2^2 (the Hessian covariant).
struct QuadForm {
    Int p, q, r;
    Int disc() const { return q * q - 4 * p * r; }
    friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

enum class ArchType { R3, RxC };  // R^3 (totally real) vs R x C

struct RingInvariants {
    Int disc;
    bool irreducible = false;
    int aut_order = 1;
    ArchType arch = ArchType::RxC;
};

// disc P(f) = x1^2 x2^2 - 4 x0 x2^3 - 4 x1^3 x3 + 18 x0 x1 x2 x3 - 27 x0^2 x3^2
Int discriminant(const Form& f);

// Determinant-twisted action (g.f)(v) = det(g)^{-1} f(v g); P(g.f) = P(f).
// Throws std::invalid_argument unless det(g) = +-1.
Form act(const Transform& g, const Form& f);

// Hessian covariant; its discriminant is -3 P(f). Throws on degenerate f.
QuadForm hessian(const Form& f);

// True iff f has no zero on P^1(Q), i.e. Q(f) is a cubic field.
bool is_irreducible(const Form& f);

// All zeros of f on P^1(Q) as primitive pairs (r,s), s > 0, or (1,0) for the
// point at infinity. Size 0 (irreducible), 1 or 3 (P(f) != 0).
std::vector<std::pair<Int, Int>> rational_roots(const Form& f);

// Unique representative of the GL2(Z)-orbit: Belabas reduction for
// irreducible forms, root-aligned Borel normal form for reducible ones.
// Idempotent and constant on orbits. Throws on P(f) = 0.
Form canonicalize(const Form& f);

bool are_equivalent(const Form& f1, const Form& f2);

// Order of Stab(GL2(Z); f) under the twisted action. 1 or 3 for irreducible
// f; 1, 2, 3 or 6 for reducible f.
int stabilizer_order(const Form& f);

RingInvariants ring_invariants(const Form& f);

// Completes a primitive vector (r,s) to a transform of determinant +1 whose
// first row is (r,s).
Transform complete_unimodular(const Int& r, const Int& s);

// Lattice points (x,y) with H(x,y) = n for positive definite H, up to the
// implicit (x,y) ~ (x,y) identity (both signs listed).
std::vector<std::pair<Int, Int>> represent_definite(const QuadForm& h, const Int& n);

// All w in GL2(Z) with H(v w) = H(v) for positive definite H.
std::vector<Transform> definite_automorphs(const QuadForm& h);

namespace detail {
// Break conditions of the reduction loops, shared with the census filters.
bool is_reduced_pos(const Form& f);
bool is_reduced_neg(const Form& f);
Form belabas_reduce(const Form& f);
}  // namespace detail

}  // namespace cubic

#endif
