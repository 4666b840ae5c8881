#include "cubic/fq.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubic {

namespace {

std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
std::uint64_t powm(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

FqEl fq_zero() { return {0, 0, 0}; }
FqEl fq_one() { return {1, 0, 0}; }
bool fq_is_zero(const FqEl& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }
FqEl fq_from_u64(const Fq& F, std::uint64_t v) { return {v % F.p, 0, 0}; }

FqEl fq_add(const Fq& F, const FqEl& a, const FqEl& b) {
    return {addm(a[0], b[0], F.p), addm(a[1], b[1], F.p), addm(a[2], b[2], F.p)};
}
FqEl fq_sub(const Fq& F, const FqEl& a, const FqEl& b) {
    return {subm(a[0], b[0], F.p), subm(a[1], b[1], F.p), subm(a[2], b[2], F.p)};
}
FqEl fq_neg(const Fq& F, const FqEl& a) {
    return {a[0] ? F.p - a[0] : 0, a[1] ? F.p - a[1] : 0, a[2] ? F.p - a[2] : 0};
}

FqEl fq_mul(const Fq& F, const FqEl& a, const FqEl& b) {
    if (F.k == 1) return {mulm(a[0], b[0], F.p), 0, 0};
    // schoolbook product, then reduce t^3 and t^4 via phi (k == 3)
    std::uint64_t p = F.p;
    std::uint64_t c0 = mulm(a[0], b[0], p);
    std::uint64_t c1 = addm(mulm(a[0], b[1], p), mulm(a[1], b[0], p), p);
    std::uint64_t c2 =
        addm(addm(mulm(a[0], b[2], p), mulm(a[1], b[1], p), p), mulm(a[2], b[0], p), p);
    std::uint64_t c3 = addm(mulm(a[1], b[2], p), mulm(a[2], b[1], p), p);
    std::uint64_t c4 = mulm(a[2], b[2], p);
    // t^3 = -(phi2 t^2 + phi1 t + phi0); fold c4 first: t^4 = t * t^3
    const std::uint64_t f0 = F.phi[0], f1 = F.phi[1], f2 = F.phi[2];
    // t^4 = -phi2 t^3 - phi1 t^2 - phi0 t
    //     = phi2(phi2 t^2 + phi1 t + phi0) - phi1 t^2 - phi0 t
    std::uint64_t t4_2 = subm(mulm(f2, f2, p), f1, p);
    std::uint64_t t4_1 = subm(mulm(f2, f1, p), f0, p);
    std::uint64_t t4_0 = mulm(f2, f0, p);
    c2 = addm(c2, mulm(c4, t4_2, p), p);
    c1 = addm(c1, mulm(c4, t4_1, p), p);
    c0 = addm(c0, mulm(c4, t4_0, p), p);
    c2 = subm(c2, mulm(c3, f2, p), p);
    c1 = subm(c1, mulm(c3, f1, p), p);
    c0 = subm(c0, mulm(c3, f0, p), p);
    return {c0, c1, c2};
}

FqEl fq_pow(const Fq& F, FqEl a, Int e) {
    if (e < 0) throw std::invalid_argument("fq_pow: negative exponent");
    FqEl r = fq_one();
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) r = fq_mul(F, r, a);
        a = fq_mul(F, a, a);
        e >>= 1;
    }
    return r;
}

FqEl fq_inv(const Fq& F, const FqEl& a) {
    if (fq_is_zero(a)) throw std::invalid_argument("fq_inv: zero");
    if (F.k == 1) return {powm(a[0], F.p - 2, F.p), 0, 0};
    return fq_pow(F, a, F.order() - 2);
}

std::array<std::uint64_t, 3> irreducible_cubic_mod_p(std::uint64_t p) {
    // A cubic over F_p is irreducible iff it has no root. Scan t^3 + a t + b
    // deterministically; roughly a third of the candidates qualify, and every
    // p admits an irreducible depressed cubic with b != 0.
    Fq F{p, 1, {}};
    for (std::uint64_t b = 1; b < p; ++b) {
        for (std::uint64_t a = 0; a < p; ++a) {
            FqPoly f;
            f.c = {fq_from_u64(F, b), fq_from_u64(F, a), fq_zero(), fq_one()};
            if (fq_roots(F, f).empty()) return {b % p, a % p, 0};
        }
    }
    throw std::logic_error("irreducible_cubic_mod_p: none found");
}

FqPoly fqp_trim(FqPoly f) {
    while (!f.c.empty() && fq_is_zero(f.c.back())) f.c.pop_back();
    return f;
}

FqEl fqp_eval(const Fq& F, const FqPoly& f, const FqEl& x) {
    FqEl r = fq_zero();
    for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) r = fq_add(F, fq_mul(F, r, x), *it);
    return r;
}

FqPoly fqp_derivative(const Fq& F, const FqPoly& f) {
    FqPoly d;
    for (std::size_t i = 1; i < f.c.size(); ++i) {
        FqEl m = fq_from_u64(F, static_cast<std::uint64_t>(i % F.p));
        d.c.push_back(fq_mul(F, m, f.c[i]));
    }
    return fqp_trim(std::move(d));
}

FqPoly fqp_mul(const Fq& F, const FqPoly& a, const FqPoly& b) {
    if (a.c.empty() || b.c.empty()) return {};
    FqPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, fq_zero());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = fq_add(F, r.c[i + j], fq_mul(F, a.c[i], b.c[j]));
    return fqp_trim(std::move(r));
}

FqPoly fqp_mod(const Fq& F, FqPoly a, const FqPoly& m) {
    a = fqp_trim(std::move(a));
    if (m.c.empty()) throw std::invalid_argument("fqp_mod: zero modulus");
    FqEl lead_inv = fq_inv(F, m.c.back());
    while (a.degree() >= m.degree()) {
        FqEl scale = fq_mul(F, a.c.back(), lead_inv);
        std::size_t shift = a.c.size() - m.c.size();
        for (std::size_t i = 0; i < m.c.size(); ++i)
            a.c[shift + i] = fq_sub(F, a.c[shift + i], fq_mul(F, scale, m.c[i]));
        a = fqp_trim(std::move(a));
        if (a.c.empty()) break;
    }
    return a;
}

FqPoly fqp_gcd(const Fq& F, FqPoly a, FqPoly b) {
    a = fqp_trim(std::move(a));
    b = fqp_trim(std::move(b));
    while (!b.c.empty()) {
        FqPoly r = fqp_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.c.empty()) {
        FqEl inv = fq_inv(F, a.c.back());
        for (auto& ci : a.c) ci = fq_mul(F, ci, inv);
    }
    return a;
}

FqPoly fqp_powmod_x(const Fq& F, const Int& e, const FqPoly& m) {
    FqPoly base;
    base.c = {fq_zero(), fq_one()};  // U
    base = fqp_mod(F, base, m);
    FqPoly r;
    r.c = {fq_one()};
    Int k = e;
    while (k > 0) {
        if (boost::multiprecision::bit_test(k, 0)) r = fqp_mod(F, fqp_mul(F, r, base), m);
        base = fqp_mod(F, fqp_mul(F, base, base), m);
        k >>= 1;
    }
    return r;
}

namespace {

// Enumerate all elements when the field is small.
std::vector<FqEl> brute_roots(const Fq& F, const FqPoly& f) {
    std::vector<FqEl> roots;
    std::uint64_t n[3] = {F.p, F.k >= 2 ? F.p : 1, F.k >= 3 ? F.p : 1};
    for (std::uint64_t i2 = 0; i2 < n[2]; ++i2)
        for (std::uint64_t i1 = 0; i1 < n[1]; ++i1)
            for (std::uint64_t i0 = 0; i0 < n[0]; ++i0) {
                FqEl x{i0, i1, i2};
                if (fq_is_zero(fqp_eval(F, f, x))) roots.push_back(x);
            }
    return roots;
}

// Split a product of distinct linear factors (odd q) by gcds with random
// shifted half-power maps.
void cz_split(const Fq& F, const FqPoly& g, std::vector<FqEl>& out, std::uint64_t& state) {
    FqPoly gg = fqp_trim(g);
    if (gg.degree() <= 0) return;
    if (gg.degree() == 1) {
        // c1 U + c0 = 0
        out.push_back(fq_neg(F, fq_mul(F, gg.c[0], fq_inv(F, gg.c[1]))));
        return;
    }
    Int half = (F.order() - 1) / 2;
    for (int tries = 0; tries < 256; ++tries) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        FqEl shift{state % F.p, (state >> 20) % (F.k >= 2 ? F.p : 1),
                   (state >> 40) % (F.k >= 3 ? F.p : 1)};
        // (U + shift)^half - 1 mod gg
        FqPoly base;
        base.c = {shift, fq_one()};
        base = fqp_mod(F, base, gg);
        FqPoly pw;
        pw.c = {fq_one()};
        Int k = half;
        FqPoly sq = base;
        while (k > 0) {
            if (boost::multiprecision::bit_test(k, 0)) pw = fqp_mod(F, fqp_mul(F, pw, sq), gg);
            sq = fqp_mod(F, fqp_mul(F, sq, sq), gg);
            k >>= 1;
        }
        if (pw.c.empty())
            pw.c = {fq_neg(F, fq_one())};
        else
            pw.c[0] = fq_sub(F, pw.c[0], fq_one());
        FqPoly h = fqp_gcd(F, pw, gg);
        if (h.degree() >= 1 && h.degree() < gg.degree()) {
            cz_split(F, h, out, state);
            // divide gg by h
            FqPoly quot;
            FqPoly rem = gg;
            // long division gg / h (h monic after gcd)
            quot.c.assign(gg.c.size() - h.c.size() + 1, fq_zero());
            while (rem.degree() >= h.degree() && !rem.c.empty()) {
                std::size_t shift_deg = rem.c.size() - h.c.size();
                FqEl s = rem.c.back();
                quot.c[shift_deg] = s;
                for (std::size_t i = 0; i < h.c.size(); ++i)
                    rem.c[shift_deg + i] = fq_sub(F, rem.c[shift_deg + i], fq_mul(F, s, h.c[i]));
                rem = fqp_trim(std::move(rem));
            }
            cz_split(F, fqp_trim(std::move(quot)), out, state);
            return;
        }
    }
    throw std::logic_error("cz_split: failed to separate roots");
}

}  // namespace

std::vector<FqEl> fq_roots(const Fq& F, const FqPoly& f0) {
    FqPoly f = fqp_trim(f0);
    if (f.c.empty()) throw std::invalid_argument("fq_roots: zero polynomial");
    if (f.degree() == 0) return {};
    if (F.order() <= 4096) return brute_roots(F, f);
    // odd q here (q <= 8 for p = 2); the product of the distinct linear
    // factors is gcd(U^q - U, f)
    FqPoly xq = fqp_powmod_x(F, F.order(), f);
    // xq - U
    FqPoly xminus = xq;
    if (xminus.c.size() < 2) xminus.c.resize(2, fq_zero());
    xminus.c[1] = fq_sub(F, xminus.c[1], fq_one());
    FqPoly g = fqp_gcd(F, fqp_trim(std::move(xminus)), f);
    std::vector<FqEl> roots;
    if (g.degree() >= 1) {
        std::uint64_t state = F.p * 0x9e3779b97f4a7c15ULL + 12345;
        cz_split(F, g, roots, state);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace cubic
