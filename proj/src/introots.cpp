#include "cubic/introots.hpp"

#include <algorithm>

namespace cubic {

namespace {

Int eval_cubic(const Int& a2, const Int& a1, const Int& a0, const Int& u) {
    return ((u + a2) * u + a1) * u + a0;
}

// Smallest integer root in (lo, hi] of the cubic restricted to a monotone
// piece; the caller guarantees monotonicity on [lo, hi]. Returns true and the
// root if the piece crosses zero at an integer.
bool bisect_root(const Int& a2, const Int& a1, const Int& a0, Int lo, Int hi, Int* out) {
    Int flo = eval_cubic(a2, a1, a0, lo);
    Int fhi = eval_cubic(a2, a1, a0, hi);
    if (flo == 0) { *out = lo; return true; }
    if (fhi == 0) { *out = hi; return true; }
    if ((flo < 0) == (fhi < 0)) return false;
    bool increasing = flo < 0;
    while (hi - lo > 1) {
        Int mid = lo + (hi - lo) / 2;
        Int fm = eval_cubic(a2, a1, a0, mid);
        if (fm == 0) { *out = mid; return true; }
        if ((fm < 0) == increasing)
            lo = mid;
        else
            hi = mid;
    }
    return false;
}

}  // namespace

std::vector<Int> monic_quadratic_integer_roots(const Int& a1, const Int& a0) {
    std::vector<Int> roots;
    Int disc = a1 * a1 - 4 * a0;
    Int s;
    if (!is_perfect_square(disc, &s)) return roots;
    // roots (-a1 +- s)/2 when integral
    if (((-a1 + s) % 2) == 0) roots.push_back((-a1 + s) / 2);
    if (s != 0 && ((-a1 - s) % 2) == 0) roots.push_back((-a1 - s) / 2);
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Int> monic_cubic_integer_roots(const Int& a2, const Int& a1, const Int& a0) {
    // Cauchy bound: every root u satisfies |u| <= 1 + max |coeff|.
    Int bound = 1;
    for (const Int* c : {&a2, &a1, &a0}) {
        Int m = boost::multiprecision::abs(*c);
        if (m > bound) bound = m;
    }
    bound += 1;

    // Critical points of the derivative 3U^2 + 2*a2*U + a1 split the line
    // into at most three monotone pieces.
    std::vector<Int> cuts;
    cuts.push_back(-bound);
    Int dd = 4 * a2 * a2 - 12 * a1;  // discriminant of the derivative
    if (dd > 0) {
        Int sd = isqrt_floor(dd);
        // Floor of the two real critical points; splitting at floor and
        // floor+1 keeps each bisection interval inside a monotone piece.
        Int c1 = (-2 * a2 - sd);  // numerator over 6
        Int c2 = (-2 * a2 + sd);
        for (const Int& num : {c1, c2}) {
            Int f = num / 6;
            if (6 * f > num) f -= 1;  // floor division
            for (Int x = f - 1; x <= f + 2; ++x)
                if (x > -bound && x < bound) cuts.push_back(x);
        }
    }
    cuts.push_back(bound);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Int> roots;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Int r;
        if (bisect_root(a2, a1, a0, cuts[i], cuts[i + 1], &r)) roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace cubic
