#include "cubic/localtypes.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "cubic/fq.hpp"

namespace cubic {

std::string to_string(SplittingSymbol s) {
    switch (s) {
        case SplittingSymbol::S111: return "111";
        case SplittingSymbol::S21: return "21";
        case SplittingSymbol::S3: return "3";
        case SplittingSymbol::S121R: return "121r";
        case SplittingSymbol::S13R: return "13r";
    }
    return "?";
}

std::optional<SplittingSymbol> symbol_from_string(const std::string& s) {
    if (s == "111") return SplittingSymbol::S111;
    if (s == "21") return SplittingSymbol::S21;
    if (s == "3") return SplittingSymbol::S3;
    if (s == "121r") return SplittingSymbol::S121R;
    if (s == "13r") return SplittingSymbol::S13R;
    return std::nullopt;
}

bool symbol_is_ramified(SplittingSymbol s) {
    return s == SplittingSymbol::S121R || s == SplittingSymbol::S13R;
}

ArchType arch_type(const Form& f) {
    Int d = discriminant(f);
    if (d == 0) throw std::invalid_argument("arch_type: degenerate form");
    return d > 0 ? ArchType::R3 : ArchType::RxC;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    Int d = n - 1;
    int r = 0;
    while (d % 2 == 0) { d /= 2; ++r; }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = boost::multiprecision::powm(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

int vp(Int n, const Int& p) {
    if (n == 0) throw std::invalid_argument("vp: zero");
    int v = 0;
    n = boost::multiprecision::abs(n);
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

std::uint64_t mod_u64(const Int& a, std::uint64_t p) {
    Int m = a % Int(p);
    if (m < 0) m += p;
    return static_cast<std::uint64_t>(m);
}

// ---- exact arithmetic in O = Z[t]/(phi), the ring of integers of the
// ---- unramified extension of degree k (k = 1 or 3), with Int coordinates

struct ORing {
    Int p;
    int k = 1;
    std::array<Int, 3> phi{};  // t^3 + phi[2] t^2 + phi[1] t + phi[0] when k = 3
};

using OEl = std::array<Int, 3>;

bool o_is_zero(const OEl& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

OEl o_add(const OEl& a, const OEl& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
OEl o_scale(const OEl& a, const Int& s) { return {a[0] * s, a[1] * s, a[2] * s}; }

OEl o_mul(const ORing& R, const OEl& a, const OEl& b) {
    if (R.k == 1) return {a[0] * b[0], Int(0), Int(0)};
    Int c0 = a[0] * b[0];
    Int c1 = a[0] * b[1] + a[1] * b[0];
    Int c2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0];
    Int c3 = a[1] * b[2] + a[2] * b[1];
    Int c4 = a[2] * b[2];
    const Int &f0 = R.phi[0], &f1 = R.phi[1], &f2 = R.phi[2];
    // t^3 = -(f2 t^2 + f1 t + f0), t^4 = (f2^2 - f1) t^2 + (f2 f1 - f0) t + f2 f0
    c2 += c4 * (f2 * f2 - f1) - c3 * f2;
    c1 += c4 * (f2 * f1 - f0) - c3 * f1;
    c0 += c4 * (f2 * f0) - c3 * f0;
    return {c0, c1, c2};
}

// minimum p-valuation over coordinates (the basis 1, t, t^2 is a Z_p-basis)
int o_min_vp(const ORing& R, const OEl& a) {
    int best = -1;
    for (const Int& c : a) {
        if (c == 0) continue;
        int v = vp(c, R.p);
        if (best < 0 || v < best) best = v;
    }
    if (best < 0) throw std::invalid_argument("o_min_vp: zero element");
    return best;
}

OEl o_div_pk(const OEl& a, const Int& pk) { return {a[0] / pk, a[1] / pk, a[2] / pk}; }

FqEl o_mod_p(const ORing& R, const Fq& F, const OEl& a) {
    return {mod_u64(a[0], F.p), R.k >= 2 ? mod_u64(a[1], F.p) : 0,
            R.k >= 3 ? mod_u64(a[2], F.p) : 0};
}

OEl o_lift(const FqEl& a) { return {Int(a[0]), Int(a[1]), Int(a[2])}; }

// dense polynomial over O, degree <= 3
using OPoly = std::vector<OEl>;

int opoly_min_vp(const ORing& R, const OPoly& h) {
    int best = -1;
    for (const OEl& c : h) {
        if (o_is_zero(c)) continue;
        int v = o_min_vp(R, c);
        if (best < 0 || v < best) best = v;
    }
    return best;  // -1 for the zero polynomial
}

// h(r + p U): Taylor shift by r (in-place Horner), then scale U by p.
OPoly opoly_shift_scale(const ORing& R, const OPoly& h, const OEl& r) {
    std::vector<OEl> b = h;
    int n = static_cast<int>(b.size());
    for (int j = 0; j < n; ++j)
        for (int i = n - 2; i >= j; --i) b[i] = o_add(b[i], o_mul(R, r, b[i + 1]));
    Int pk = 1;
    for (int j = 0; j < n; ++j) {
        b[j] = o_scale(b[j], pk);
        pk *= R.p;
    }
    return b;
}

FqPoly opoly_reduce(const ORing& R, const Fq& F, const OPoly& h) {
    FqPoly f;
    for (const OEl& c : h) f.c.push_back(o_mod_p(R, F, c));
    return fqp_trim(std::move(f));
}

struct RootCountTask {
    const ORing& R;
    const Fq& F;
    int budget;
    bool existence_only;
    int found = 0;

    // counts distinct roots of h in O; h nonzero mod p
    void run(const OPoly& h, int depth) {
        if (existence_only && found > 0) return;
        if (depth > budget)
            throw PrecisionError("p-adic root isolation exceeded its depth budget");
        FqPoly hbar = opoly_reduce(R, F, h);
        if (hbar.c.empty()) throw std::logic_error("root isolation: polynomial vanished mod p");
        if (hbar.degree() == 0) return;
        FqPoly dbar = fqp_derivative(F, hbar);
        for (const FqEl& rbar : fq_roots(F, hbar)) {
            if (existence_only && found > 0) return;
            if (!fq_is_zero(fqp_eval(F, dbar, rbar))) {
                ++found;  // simple residue root lifts uniquely (Hensel)
                continue;
            }
            OPoly h2 = opoly_shift_scale(R, h, o_lift(rbar));
            int k = opoly_min_vp(R, h2);
            if (k < 1) throw std::logic_error("root isolation: no contraction at multiple root");
            Int pk = 1;
            for (int i = 0; i < k; ++i) pk *= R.p;
            for (OEl& c : h2) c = o_div_pk(c, pk);
            run(h2, depth + 1);
        }
    }
};

// Distinct roots in Z_{p^k} of the monic cubic U^3 + a2 U^2 + a1 U + a0 with
// Int coefficients. existence_only stops at the first confirmed root.
int count_roots_unramified(const Int& p, int k, const Int& a2, const Int& a1, const Int& a0,
                           int budget, int escalation_cap, bool existence_only) {
    ORing R;
    R.p = p;
    R.k = k;
    Fq F;
    F.p = static_cast<std::uint64_t>(p);
    F.k = k;
    if (k == 3) {
        auto c = irreducible_cubic_mod_p(F.p);
        F.phi = c;
        R.phi = {Int(c[0]), Int(c[1]), Int(c[2])};
    }
    OPoly h = {OEl{a0, 0, 0}, OEl{a1, 0, 0}, OEl{a2, 0, 0}, OEl{Int(1), 0, 0}};
    for (int b = budget; b <= escalation_cap; b = std::max(2 * b, b + 1)) {
        RootCountTask task{R, F, b, existence_only};
        try {
            task.run(h, 0);
            return task.found;
        } catch (const PrecisionError&) {
            if (2 * b > escalation_cap) throw;
        }
    }
    throw PrecisionError("p-adic precision escalation exceeded its cap");
}

}  // namespace

QuadraticType quadratic_ramification(const Rat& D, const Int& p) {
    if (D == 0) throw std::invalid_argument("quadratic_ramification: D = 0");
    Int num = boost::multiprecision::numerator(D);
    Int den = boost::multiprecision::denominator(D);
    int v = vp(num, p) - vp(den, p);
    Int unum = num, uden = den;
    while (unum % p == 0) unum /= p;
    while (uden % p == 0) uden /= p;
    if (p == 2) {
        if (v % 2 != 0) return QuadraticType::Ramified;
        // odd part mod 8
        Int u = unum * uden;  // same square class as unum/uden
        Int m = u % 8;
        if (m < 0) m += 8;
        if (m == 1) return QuadraticType::Split;
        if (m == 5) return QuadraticType::Unramified;
        return QuadraticType::Ramified;
    }
    if (v % 2 != 0) return QuadraticType::Ramified;
    Int u = unum * uden % p;
    if (u < 0) u += p;
    Int ls = boost::multiprecision::powm(u, (p - 1) / 2, p);
    return ls == 1 ? QuadraticType::Split : QuadraticType::Unramified;
}

SplittingSymbol symbol_mod_p(const Form& f, const Int& p) {
    Int P = discriminant(f);
    if (P == 0) throw std::invalid_argument("symbol_mod_p: degenerate form");
    if (P % p == 0) throw std::invalid_argument("symbol_mod_p: p divides the discriminant");
    if (p > Int(std::uint64_t(1) << 31)) throw std::invalid_argument("symbol_mod_p: p too large");
    Fq F{static_cast<std::uint64_t>(p), 1, {}};
    FqPoly poly;  // f(T,1) mod p
    poly.c = {FqEl{mod_u64(f.x3, F.p), 0, 0}, FqEl{mod_u64(f.x2, F.p), 0, 0},
              FqEl{mod_u64(f.x1, F.p), 0, 0}, FqEl{mod_u64(f.x0, F.p), 0, 0}};
    poly = fqp_trim(std::move(poly));
    int count = (f.x0 % p == 0 ? 1 : 0);  // zero at [1:0]
    count += static_cast<int>(fq_roots(F, poly).size());
    switch (count) {
        case 3: return SplittingSymbol::S111;
        case 1: return SplittingSymbol::S21;
        case 0: return SplittingSymbol::S3;
        default: throw std::logic_error("symbol_mod_p: impossible zero count");
    }
}

SplittingSymbol symbol_padic(const Form& f0, const PAdicContext& ctx) {
    const Int& p = ctx.p;
    Int P = discriminant(f0);
    if (P == 0) throw std::invalid_argument("symbol_padic: degenerate form");
    if (p > Int(std::uint64_t(1) << 31)) throw std::invalid_argument("symbol_padic: p too large");

    // strip p from the content (scaling does not change the algebra)
    Form f = f0;
    {
        Int c = igcd(igcd(boost::multiprecision::abs(f.x0), boost::multiprecision::abs(f.x1)),
                     igcd(boost::multiprecision::abs(f.x2), boost::multiprecision::abs(f.x3)));
        while (c % p == 0) {
            f.x0 /= p; f.x1 /= p; f.x2 /= p; f.x3 /= p;
            c /= p;
        }
    }

    // move a point where f is nonzero (preferably a p-unit value) to [1:0]
    {
        static const std::pair<int, int> pts[] = {{1, 0}, {0, 1}, {1, 1},  {1, -1}, {2, 1},
                                                  {1, 2}, {2, -1}, {1, -2}, {3, 1},  {1, 3}};
        auto eval = [&](int r, int s) -> Int {
            Int rr = r, ss = s;
            return ((f.x0 * rr + f.x1 * ss) * rr + f.x2 * ss * ss) * rr + f.x3 * ss * ss * ss;
        };
        int best_r = 0, best_s = 0, best_v = -1;
        for (auto [r, s] : pts) {
            Int val = eval(r, s);
            if (val == 0) continue;
            int v = vp(val, p);
            if (best_v < 0 || v < best_v) {
                best_r = r;
                best_s = s;
                best_v = v;
            }
            if (v == 0) break;
        }
        if (best_v < 0) throw std::logic_error("symbol_padic: no nonvanishing point found");
        if (!(best_r == 1 && best_s == 0))
            f = act(complete_unimodular(Int(best_r), Int(best_s)), f);
    }

    // monic model M(U) = U^3 + x1 U^2 + x0 x2 U + x0^2 x3, disc(M) = x0^2 P
    Int A2 = f.x1, A1 = f.x0 * f.x2, A0 = f.x0 * f.x0 * f.x3;
    int vdisc = vp(f.x0 * f.x0, p) + vp(P, p);
    int budget = ctx.precision > 0 ? ctx.precision : 2 * vdisc + 10;

    int n = count_roots_unramified(p, 1, A2, A1, A0, budget, ctx.escalation_cap, false);
    if (n == 3) return SplittingSymbol::S111;
    if (n == 1) {
        // the residual quadratic has the same square class as P
        switch (quadratic_ramification(Rat(P), p)) {
            case QuadraticType::Unramified: return SplittingSymbol::S21;
            case QuadraticType::Ramified: return SplittingSymbol::S121R;
            case QuadraticType::Split:
                throw std::logic_error("symbol_padic: split residual with a single root");
        }
    }
    if (n != 0) throw std::logic_error("symbol_padic: impossible root count");
    bool unram = count_roots_unramified(p, 3, A2, A1, A0, budget, ctx.escalation_cap, true) > 0;
    return unram ? SplittingSymbol::S3 : SplittingSymbol::S13R;
}

SplittingSymbol splitting_symbol(const Form& f, const Int& p) {
    Int P = discriminant(f);
    if (P == 0) throw std::invalid_argument("splitting_symbol: degenerate form");
    if (P % p != 0) return symbol_mod_p(f, p);
    PAdicContext ctx;
    ctx.p = p;
    return symbol_padic(f, ctx);
}

}  // namespace cubic
