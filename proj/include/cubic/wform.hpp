#ifndef CUBIC_WFORM_HPP
#define CUBIC_WFORM_HPP

#include "cubic/form.hpp"
#include "cubic/numeric.hpp"

namespace cubic {

// Form with the linear factor v2 split off:  v2 * (y1 v1^2 + y2 v1 v2 + y3 v2^2).
// The lower-triangular group B(Z) = {(t,0;u,p) : t,p = +-1, u in Z} keeps this
// shape; its orbits carry the reducible side of the count.
struct WForm {
    Int y1, y2, y3;

    friend bool operator==(const WForm&, const WForm&) = default;
    friend bool operator<(const WForm& a, const WForm& b) {
        if (a.y1 != b.y1) return a.y1 < b.y1;
        if (a.y2 != b.y2) return a.y2 < b.y2;
        return a.y3 < b.y3;
    }

    Form as_form() const { return Form{0, y1, y2, y3}; }
};

// P(0,y1,y2,y3) = y1^2 (y2^2 - 4 y1 y3)
Int w_disc(const WForm& y);

// Twisted action of (t,0;u,p), t,p = +-1.
WForm borel_apply(const WForm& y, int t, int p, const Int& u);

// Normal form: y1 > 0, 0 <= y2 < 2*y1, lexicographically least among the
// residual sign choices. Unique per B(Z)-orbit. Requires w_disc(y) != 0.
WForm w_normalize(const WForm& y);

// #Stab(B(Z); y): 2 iff y1 | y2, else 1.
int w_stab_order(const WForm& y);

}  // namespace cubic

#endif
