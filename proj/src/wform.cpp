#include "cubic/wform.hpp"

#include <stdexcept>

namespace cubic {

Int w_disc(const WForm& y) { return y.y1 * y.y1 * (y.y2 * y.y2 - 4 * y.y1 * y.y3); }

WForm borel_apply(const WForm& y, int t, int p, const Int& u) {
    if ((t != 1 && t != -1) || (p != 1 && p != -1))
        throw std::invalid_argument("borel_apply: t, p must be +-1");
    WForm r;
    r.y1 = t * y.y1;
    r.y2 = 2 * y.y1 * u + p * y.y2;
    r.y3 = t * (y.y1 * u * u + p * y.y2 * u + y.y3);
    return r;
}

WForm w_normalize(const WForm& y) {
    if (y.y1 == 0 || w_disc(y) == 0) throw std::invalid_argument("w_normalize: degenerate form");
    int t = y.y1 > 0 ? 1 : -1;
    bool have = false;
    WForm best{};
    for (int p : {1, -1}) {
        // translate p*y2 into [0, 2|y1|)
        Int twoy1 = 2 * boost::multiprecision::abs(y.y1);
        Int target = p * y.y2;
        Int m = target % twoy1;
        if (m < 0) m += twoy1;
        Int u = (m - target) / twoy1;
        if (t < 0) u = -u;  // (t,p,u): y2' = 2*y1*u + p*y2 and y1 < 0 flips the step sign
        WForm cand = borel_apply(y, t, p, u);
        if (!have || cand < best) {
            best = cand;
            have = true;
        }
    }
    return best;
}

int w_stab_order(const WForm& y) {
    if (y.y1 == 0) throw std::invalid_argument("w_stab_order: y1 = 0");
    return y.y2 % y.y1 == 0 ? 2 : 1;
}

}  // namespace cubic
