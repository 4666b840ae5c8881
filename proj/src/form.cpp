#include "cubic/form.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cubic/introots.hpp"
#include "cubic/wform.hpp"

namespace cubic {

Int discriminant(const Form& f) {
    const Int &a = f.x0, &b = f.x1, &c = f.x2, &d = f.x3;
    return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d + 18 * a * b * c * d -
           27 * a * a * d * d;
}

std::ostream& operator<<(std::ostream& os, const Form& f) {
    return os << "(" << f.x0 << "," << f.x1 << "," << f.x2 << "," << f.x3 << ")";
}

std::string to_csv(const Form& f) {
    std::ostringstream os;
    os << f.x0 << "," << f.x1 << "," << f.x2 << "," << f.x3;
    return os.str();
}

Form form_from_csv(const std::string& s) {
    std::istringstream is(s);
    Form f;
    char comma;
    if (!(is >> f.x0 >> comma >> f.x1 >> comma >> f.x2 >> comma >> f.x3))
        throw std::invalid_argument("form_from_csv: expected \"x0,x1,x2,x3\": " + s);
    return f;
}

Form act(const Transform& g, const Form& f) {
    Int det = g.det();
    if (det != 1 && det != -1) throw std::invalid_argument("act: transform must be unimodular");
    const Int &a = g.a, &b = g.b, &c = g.c, &d = g.d;
    const Int &x0 = f.x0, &x1 = f.x1, &x2 = f.x2, &x3 = f.x3;
    // f((v1,v2) g) = f(a v1 + c v2, b v1 + d v2), then divide by det.
    Form r;
    r.x0 = x0 * a * a * a + x1 * a * a * b + x2 * a * b * b + x3 * b * b * b;
    r.x1 = 3 * x0 * a * a * c + x1 * (a * a * d + 2 * a * b * c) + x2 * (2 * a * b * d + b * b * c) +
           3 * x3 * b * b * d;
    r.x2 = 3 * x0 * a * c * c + x1 * (2 * a * c * d + b * c * c) + x2 * (a * d * d + 2 * b * c * d) +
           3 * x3 * b * d * d;
    r.x3 = x0 * c * c * c + x1 * c * c * d + x2 * c * d * d + x3 * d * d * d;
    if (det < 0) {
        r.x0 = -r.x0;
        r.x1 = -r.x1;
        r.x2 = -r.x2;
        r.x3 = -r.x3;
    }
    return r;
}

QuadForm hessian(const Form& f) {
    if (discriminant(f) == 0) throw std::invalid_argument("hessian: degenerate form");
    const Int &a = f.x0, &b = f.x1, &c = f.x2, &d = f.x3;
    return QuadForm{b * b - 3 * a * c, b * c - 9 * a * d, c * c - 3 * b * d};
}

std::vector<std::pair<Int, Int>> rational_roots(const Form& f) {
    if (discriminant(f) == 0) throw std::invalid_argument("rational_roots: degenerate form");
    std::vector<std::pair<Int, Int>> roots;
    if (f.x0 == 0) {
        roots.emplace_back(1, 0);  // zero at [1:0]
        // remaining factor y1 T^2 + y2 T + y3, y1 = x1 != 0
        for (const Int& u : monic_quadratic_integer_roots(f.x2, f.x1 * f.x3)) {
            Int g = igcd(boost::multiprecision::abs(u), boost::multiprecision::abs(f.x1));
            Int r = u / g, s = f.x1 / g;
            if (s < 0) { r = -r; s = -s; }
            roots.emplace_back(r, s);
        }
    } else {
        // T = U/x0 for integer roots U of the monicized cubic
        for (const Int& u : monic_cubic_integer_roots(f.x1, f.x0 * f.x2, f.x0 * f.x0 * f.x3)) {
            Int g = igcd(boost::multiprecision::abs(u), boost::multiprecision::abs(f.x0));
            Int r = u / g, s = f.x0 / g;
            if (s < 0) { r = -r; s = -s; }
            roots.emplace_back(r, s);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

bool is_irreducible(const Form& f) {
    if (discriminant(f) == 0) throw std::invalid_argument("is_irreducible: degenerate form");
    if (f.x0 == 0) return false;
    return monic_cubic_integer_roots(f.x1, f.x0 * f.x2, f.x0 * f.x0 * f.x3).empty();
}

namespace {

Form swap_vars(const Form& f) { return Form{f.x3, f.x2, f.x1, f.x0}; }     // f(v2,v1)
Form flip_v1(const Form& f) { return Form{-f.x0, f.x1, -f.x2, f.x3}; }     // f(-v1,v2)
Form flip_v2(const Form& f) { return Form{f.x0, -f.x1, f.x2, -f.x3}; }     // f(v1,-v2)
Form shear(const Form& f, const Int& k) {                                  // f(v1+k*v2, v2)
    const Int &a = f.x0, &b = f.x1, &c = f.x2, &d = f.x3;
    return Form{a, 3 * a * k + b, 3 * a * k * k + 2 * b * k + c,
                a * k * k * k + b * k * k + c * k + d};
}

constexpr int kReduceMaxIter = 20000;

}  // namespace

namespace detail {

// Reduction of irreducible forms after Belabas, "A fast algorithm to compute
// cubic fields" (Math. Comp. 66). Positive discriminant: drive the Hessian
// (P,Q,R) into the reduced domain |Q| <= P <= R with his tie-breaks.
bool is_reduced_pos(const Form& f) {
    const Int &a = f.x0, &b = f.x1, &c = f.x2, &d = f.x3;
    Int hp = b * b - 3 * a * c;
    Int hq = b * c - 9 * a * d;
    Int hr = c * c - 3 * b * d;
    Int absd = boost::multiprecision::abs(d);
    if (a < 0) return false;
    if (b < 0 || (b == 0 && d < 0)) return false;
    if (hp > hr || (hp == hr && (a > absd || (a == absd && b >= boost::multiprecision::abs(c)))))
        return false;
    if (hq > hp || -hq > hp) return false;
    if (hp == hq && b >= boost::multiprecision::abs(3 * a - b)) return false;
    return true;
}

// Negative discriminant: unique real linear factor; reduced when the complex
// root of the quadratic factor lies in the standard fundamental domain.
bool is_reduced_neg(const Form& f) {
    const Int &a = f.x0, &b = f.x1, &c = f.x2, &d = f.x3;
    if (d * d - a * a + a * c - b * d <= 0) return false;
    if (a < 0) return false;
    if (b < 0 || (b == 0 && d < 0)) return false;
    if (a * d - b * c >= (a + b) * (a + b) + a * c) return false;
    if (a * d - b * c <= -(a - b) * (a - b) - a * c) return false;
    return true;
}

Form belabas_reduce(const Form& f0) {
    Form f = f0;
    bool positive = discriminant(f) > 0;
    for (int iter = 0; iter < kReduceMaxIter; ++iter) {
        const Int &a = f.x0, &b = f.x1, &c = f.x2, &d = f.x3;
        if (positive) {
            Int hp = b * b - 3 * a * c;
            Int hq = b * c - 9 * a * d;
            Int hr = c * c - 3 * b * d;
            Int absd = boost::multiprecision::abs(d);
            if (a < 0) {
                f = flip_v1(f);
            } else if (b < 0 || (b == 0 && d < 0)) {
                f = flip_v2(f);
            } else if (hp > hr ||
                       (hp == hr &&
                        (a > absd || (a == absd && b >= boost::multiprecision::abs(c))))) {
                f = swap_vars(f);
            } else if (hq > hp) {
                f = shear(f, -1);
            } else if (-hq > hp) {
                f = shear(f, 1);
            } else if (hq == 0 && d >= 0) {
                // Unreachable for irreducible input (the condition is
                // redundant with the tie-breaks above).
                throw std::logic_error("belabas_reduce: boundary state on irreducible form");
            } else if (hp == hq && b >= boost::multiprecision::abs(3 * a - b)) {
                f = shear(f, -1);
            } else {
                return f;
            }
        } else {
            if (d * d - a * a + a * c - b * d <= 0) {
                f = swap_vars(f);
            } else if (a < 0) {
                f = flip_v1(f);
            } else if (b < 0 || (b == 0 && d < 0)) {
                f = flip_v2(f);
            } else if (a * d - b * c >= (a + b) * (a + b) + a * c) {
                f = shear(f, 1);
            } else if (a * d - b * c <= -(a - b) * (a - b) - a * c) {
                f = shear(f, -1);
            } else {
                return f;
            }
        }
    }
    throw std::logic_error("belabas_reduce: did not terminate");
}

}  // namespace detail

Transform complete_unimodular(const Int& r, const Int& s) {
    // r*w - s*u = 1 via extended gcd
    Int old_r = r, rr = s;
    Int old_s = 1, ss = 0;
    Int old_t = 0, tt = 1;
    while (rr != 0) {
        Int q = old_r / rr;
        Int tmp = old_r - q * rr; old_r = rr; rr = tmp;
        tmp = old_s - q * ss; old_s = ss; ss = tmp;
        tmp = old_t - q * tt; old_t = tt; tt = tmp;
    }
    if (old_r != 1 && old_r != -1)
        throw std::invalid_argument("complete_unimodular: (r,s) not primitive");
    // old_s * r + old_t * s = old_r = +-1
    Int u = -old_t * old_r, w = old_s * old_r;
    Transform g{r, s, u, w};
    if (g.det() != 1) throw std::logic_error("complete_unimodular: internal error");
    return g;
}

namespace {

// Canonical reducible representative: move each rational zero to [1:0] and
// take the least Borel normal form over the zeros.
Form canonical_reducible(const Form& f) {
    auto roots = rational_roots(f);
    if (roots.empty()) throw std::logic_error("canonical_reducible: no rational zero");
    bool have = false;
    WForm best{};
    for (const auto& [r, s] : roots) {
        Form moved = act(complete_unimodular(r, s), f);
        if (moved.x0 != 0) throw std::logic_error("canonical_reducible: zero not moved to [1:0]");
        WForm w = w_normalize(WForm{moved.x1, moved.x2, moved.x3});
        if (!have || w < best) {
            best = w;
            have = true;
        }
    }
    return best.as_form();
}

}  // namespace

Form canonicalize(const Form& f) {
    if (discriminant(f) == 0) throw std::invalid_argument("canonicalize: degenerate form");
    if (is_irreducible(f)) return detail::belabas_reduce(f);
    return canonical_reducible(f);
}

bool are_equivalent(const Form& f1, const Form& f2) {
    Int p1 = discriminant(f1), p2 = discriminant(f2);
    if (p1 == 0 || p2 == 0) throw std::invalid_argument("are_equivalent: degenerate form");
    if (p1 != p2) return false;  // P is an invariant
    return canonicalize(f1) == canonicalize(f2);
}

std::vector<std::pair<Int, Int>> represent_definite(const QuadForm& h, const Int& n) {
    std::vector<std::pair<Int, Int>> pts;
    if (n < 0) return pts;
    Int det4 = 4 * h.p * h.r - h.q * h.q;  // > 0 for definite h
    if (det4 <= 0 || h.p <= 0) throw std::invalid_argument("represent_definite: form not definite");
    // p*(x + q*y/(2p))^2 + det4*y^2/(4p) = n  =>  y^2 <= 4*p*n/det4
    Int ymax = isqrt_floor(4 * h.p * n / det4);
    for (Int y = -ymax; y <= ymax; ++y) {
        // p x^2 + (q y) x + (r y^2 - n) = 0
        Int disc = h.q * h.q * y * y - 4 * h.p * (h.r * y * y - n);
        Int sd;
        if (!is_perfect_square(disc, &sd)) continue;
        for (int sign : {1, -1}) {
            Int num = -h.q * y + sign * sd;
            if (num % (2 * h.p) != 0) continue;
            pts.emplace_back(num / (2 * h.p), y);
            if (sd == 0) break;
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::vector<Transform> definite_automorphs(const QuadForm& h) {
    std::vector<Transform> autos;
    auto top = represent_definite(h, h.p);
    auto bottom = represent_definite(h, h.r);
    for (const auto& [a, b] : top) {
        for (const auto& [c, d] : bottom) {
            Int det = a * d - b * c;
            if (det != 1 && det != -1) continue;
            // cross coefficient of H((v1,v2) w)
            if (2 * h.p * a * c + h.q * (a * d + b * c) + 2 * h.r * b * d != h.q) continue;
            autos.push_back(Transform{a, b, c, d});
        }
    }
    return autos;
}

namespace {

// Stabilizer of a fully split form: an element permutes the three rational
// zeros, and a fractional linear map is pinned by three points. Build the
// unique candidate per permutation and test it.
int stab_split(const Form& f, const std::vector<std::pair<Int, Int>>& roots) {
    // column-convention matrix sending ([1:0],[0:1],[1:1]) to the given points
    auto frame = [](const std::pair<Int, Int>& p1, const std::pair<Int, Int>& p2,
                    const std::pair<Int, Int>& p3) {
        Int alpha = p3.first * p2.second - p3.second * p2.first;
        Int beta = p1.first * p3.second - p1.second * p3.first;
        // columns alpha*p1, beta*p2
        return std::array<Int, 4>{alpha * p1.first, beta * p2.first, alpha * p1.second,
                                  beta * p2.second};
    };
    auto adjugate = [](const std::array<Int, 4>& m) {
        return std::array<Int, 4>{m[3], -m[1], -m[2], m[0]};
    };
    std::vector<Transform> seen;
    int count = 0;
    std::array<int, 3> perm{0, 1, 2};
    std::sort(perm.begin(), perm.end());
    do {
        auto src = frame(roots[0], roots[1], roots[2]);
        auto dst = frame(roots[perm[0]], roots[perm[1]], roots[perm[2]]);
        // row action v -> v*h permuting zeros: h^T = dst * src^{-1} up to scale
        auto inv = adjugate(src);
        std::array<Int, 4> ht{dst[0] * inv[0] + dst[1] * inv[2], dst[0] * inv[1] + dst[1] * inv[3],
                              dst[2] * inv[0] + dst[3] * inv[2], dst[2] * inv[1] + dst[3] * inv[3]};
        Int g = igcd(igcd(boost::multiprecision::abs(ht[0]), boost::multiprecision::abs(ht[1])),
                     igcd(boost::multiprecision::abs(ht[2]), boost::multiprecision::abs(ht[3])));
        if (g == 0) continue;
        for (auto& v : ht) v /= g;
        Transform h{ht[0], ht[2], ht[1], ht[3]};  // transpose back to row convention
        Int det = h.det();
        if (det != 1 && det != -1) continue;
        for (int sign : {1, -1}) {
            Transform s{sign * h.a, sign * h.b, sign * h.c, sign * h.d};
            bool dup = false;
            for (const auto& t : seen)
                dup = dup || (t.a == s.a && t.b == s.b && t.c == s.c && t.d == s.d);
            if (dup) continue;
            seen.push_back(s);
            if (act(s, f) == f) ++count;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace

int stabilizer_order(const Form& f) {
    Int disc = discriminant(f);
    if (disc == 0) throw std::invalid_argument("stabilizer_order: degenerate form");
    if (is_irreducible(f)) {
        if (!is_perfect_square(disc)) return 1;
        // cyclic-field candidates are totally real; count the Hessian
        // automorphs fixing f
        int count = 0;
        Form g = canonicalize(f);
        for (const auto& w : definite_automorphs(hessian(g)))
            if (act(w, g) == g) ++count;
        if (count != 1 && count != 3)
            throw std::logic_error("stabilizer_order: irreducible stabilizer not 1 or 3");
        return count;
    }
    Form g = canonicalize(f);
    auto roots = rational_roots(g);
    if (roots.size() == 3) return stab_split(g, roots);
    // one rational zero, at [1:0] on the canonical form: the stabilizer lives
    // in the Borel of that zero
    if (g.x0 != 0) throw std::logic_error("stabilizer_order: reducible canonical form");
    return w_stab_order(WForm{g.x1, g.x2, g.x3});
}

RingInvariants ring_invariants(const Form& f) {
    RingInvariants inv;
    inv.disc = discriminant(f);
    if (inv.disc == 0) throw std::invalid_argument("ring_invariants: degenerate form");
    inv.irreducible = is_irreducible(f);
    inv.aut_order = stabilizer_order(f);
    inv.arch = inv.disc > 0 ? ArchType::R3 : ArchType::RxC;
    return inv;
}

}  // namespace cubic
