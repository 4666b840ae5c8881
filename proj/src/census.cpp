#include "cubic/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>

namespace cubic {

namespace {

using std::int64_t;
using i128 = __int128;

// The enumeration core runs in int64 with intermediates in __int128. The
// products involved stay below 2^63 for X up to ~2e9; refuse anything larger
// rather than risk the fast path silently wrapping.
constexpr int64_t kEnumXMax = 2'000'000'000;

int effective_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

int64_t disc_i64(int64_t a, int64_t b, int64_t c, int64_t d) {
    return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d + 18 * a * b * c * d -
           27 * a * a * d * d;
}

struct RawForm {
    int64_t a, b, c, d;
    int64_t disc;
};

// d-interval endpoints of {d : lo < disc(a,b,c,d) < hi} for fixed (a,b,c):
// the discriminant is a downward parabola in d. Candidates are clamped by the
// parabola roots and verified exactly per d by the caller.
struct DRange {
    int64_t lo = 0, hi = -1;  // empty by default
};

// integer points with k2 d^2 + k1 d + k0 > 0, k2 < 0 (between the real roots)
DRange parabola_positive_range(int64_t k2, int64_t k1, int64_t k0) {
    i128 delta = static_cast<i128>(k1) * k1 - 4 * static_cast<i128>(k2) * k0;
    if (delta <= 0) return {};
    // roots (-k1 -+ sqrt(delta)) / (2 k2), with 2 k2 < 0
    long double sd = sqrtl(static_cast<long double>(delta));
    long double r1 = (-k1 + sd) / (2.0L * k2);
    long double r2 = (-k1 - sd) / (2.0L * k2);
    if (r1 > r2) std::swap(r1, r2);
    DRange r;
    r.lo = static_cast<int64_t>(floorl(r1)) - 2;
    r.hi = static_cast<int64_t>(ceill(r2)) + 2;
    return r;
}

// ---- positive discriminant, irreducible classes --------------------------
// The canonical (reduced) form satisfies a >= 1, b >= 0, |Q| <= P <= R for
// the Hessian (P,Q,R), which forces
//   (b - 3a/2)^2 + 27 a^2/4 <= P <= sqrt(disc) < sqrt(X).
template <typename Sink>
void sweep_pos_a(int64_t a, int64_t x_bound, Sink&& sink) {
    int64_t s2 = isqrt64(x_bound - 1);  // max Hessian leading coefficient
    i128 a227 = static_cast<i128>(27) * a * a;
    if (4 * static_cast<i128>(s2) < a227) return;
    int64_t win = isqrt64(static_cast<int64_t>((4 * static_cast<i128>(s2) - a227) / 4));
    int64_t blo = std::max<int64_t>(0, (3 * a) / 2 - win - 1);
    int64_t bhi = (3 * a + 1) / 2 + win + 1;
    for (int64_t b = blo; b <= bhi; ++b) {
        // 1 <= b^2 - 3ac <= s2
        int64_t clo = ceil_div(b * b - s2, 3 * a);
        int64_t chi = floor_div(b * b - 1, 3 * a);
        for (int64_t c = clo; c <= chi; ++c) {
            int64_t k2 = -27 * a * a;
            int64_t k1 = 18 * a * b * c - 4 * b * b * b;
            int64_t k0 = b * b * c * c - 4 * a * c * c * c;
            DRange dr = parabola_positive_range(k2, k1, k0);
            for (int64_t d = dr.lo; d <= dr.hi; ++d) {
                int64_t disc = disc_i64(a, b, c, d);
                if (disc <= 0 || disc >= x_bound) continue;
                sink(RawForm{a, b, c, d, disc});
            }
        }
    }
}

// ---- negative discriminant, irreducible classes --------------------------
// Bounds follow from the quadratic-factor reduction: the complex root lies in
// the standard fundamental domain, giving
//   27 a^4 / 16 <= |disc|,  b <= 3a/2 + (X/3)^{1/4},
//   |c| <= 3a/4 + (X/4)^{1/3} a^{-1/3} + (X/3)^{1/4}.
template <typename Sink>
void sweep_neg_a(int64_t a, int64_t x_bound, Sink&& sink) {
    double X = static_cast<double>(x_bound);
    int64_t bmax = static_cast<int64_t>(1.5 * a + std::pow(X / 3.0, 0.25)) + 2;
    int64_t cmax = static_cast<int64_t>(0.75 * a + std::pow(X / 4.0, 1.0 / 3.0) / std::cbrt(a) +
                                        std::pow(X / 3.0, 0.25)) +
                   2;
    for (int64_t b = 0; b <= bmax; ++b) {
        for (int64_t c = -cmax; c <= cmax; ++c) {
            int64_t k2 = -27 * a * a;
            int64_t k1 = 18 * a * b * c - 4 * b * b * b;
            int64_t k0 = b * b * c * c - 4 * a * c * c * c;
            // -X < disc < 0: inside the disc > -X interval, with the
            // disc >= 0 plateau skipped (its interior bounds are exact since
            // the parabola range carries 2 integers of padding)
            DRange outer = parabola_positive_range(k2, k1, k0 + x_bound);
            if (outer.hi < outer.lo) continue;
            DRange inner = parabola_positive_range(k2, k1, k0);
            for (int64_t d = outer.lo; d <= outer.hi; ++d) {
                if (inner.hi >= inner.lo && d >= inner.lo + 3 && d < inner.hi - 3)
                    d = inner.hi - 3;  // strictly inside the plateau: disc > 0
                int64_t disc = disc_i64(a, b, c, d);
                if (disc >= 0 || disc <= -x_bound) continue;
                sink(RawForm{a, b, c, d, disc});
            }
        }
    }
}

bool is_reduced_pos_i64(const RawForm& f) {
    int64_t a = f.a, b = f.b, c = f.c, d = f.d;
    if (a < 0) return false;
    if (b < 0 || (b == 0 && d < 0)) return false;
    int64_t hp = b * b - 3 * a * c;
    int64_t hq = b * c - 9 * a * d;
    int64_t hr = c * c - 3 * b * d;
    int64_t absd = d < 0 ? -d : d;
    int64_t absc = c < 0 ? -c : c;
    if (hp > hr || (hp == hr && (a > absd || (a == absd && b >= absc)))) return false;
    if (hq > hp || -hq > hp) return false;
    if (hp == hq && b >= std::abs(3 * a - b)) return false;
    return true;
}

bool is_reduced_neg_i64(const RawForm& f) {
    int64_t a = f.a, b = f.b, c = f.c, d = f.d;
    if (d * d - a * a + a * c - b * d <= 0) return false;
    if (a < 0) return false;
    if (b < 0 || (b == 0 && d < 0)) return false;
    if (a * d - b * c >= (a + b) * (a + b) + a * c) return false;
    if (a * d - b * c <= -(a - b) * (a - b) - a * c) return false;
    return true;
}

// irreducibility of (a,b,c,d) with a != 0 over Q, in int64/int128:
// integer roots of U^3 + b U^2 + ac U + a^2 d
bool irreducible_i64(const RawForm& f) {
    i128 a2 = f.b, a1 = static_cast<i128>(f.a) * f.c,
         a0 = static_cast<i128>(f.a) * f.a * f.d;
    auto eval = [&](i128 u) { return ((u + a2) * u + a1) * u + a0; };
    // scan critical structure by sign changes over a Cauchy-bounded interval
    i128 bound = 2;
    for (i128 v : {a2 < 0 ? -a2 : a2, a1 < 0 ? -a1 : a1, a0 < 0 ? -a0 : a0})
        if (v + 1 > bound) bound = v + 1;
    // derivative 3u^2 + 2 a2 u + a1: critical points split monotone pieces
    std::vector<i128> cuts{-bound, bound};
    i128 dd = 4 * a2 * a2 - 12 * a1;
    if (dd > 0) {
        long double sd = sqrtl(static_cast<long double>(dd));
        i128 c1 = static_cast<i128>(floorl((-2.0L * static_cast<long double>(a2) - sd) / 6.0L));
        i128 c2 = static_cast<i128>(floorl((-2.0L * static_cast<long double>(a2) + sd) / 6.0L));
        for (i128 base : {c1, c2})
            for (i128 off = -1; off <= 2; ++off)
                if (base + off > -bound && base + off < bound) cuts.push_back(base + off);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        i128 lo = cuts[i], hi = cuts[i + 1];
        i128 flo = eval(lo), fhi = eval(hi);
        if (flo == 0 || fhi == 0) return false;
        if ((flo < 0) == (fhi < 0)) continue;
        bool increasing = flo < 0;
        while (hi - lo > 1) {
            i128 mid = lo + (hi - lo) / 2;
            i128 fm = eval(mid);
            if (fm == 0) return false;
            if ((fm < 0) == increasing)
                lo = mid;
            else
                hi = mid;
        }
    }
    return true;
}

// ---- W-forms in int64 -----------------------------------------------------

struct RawW {
    int64_t y1, y2, y3;
    int64_t disc;  // y1^2 (y2^2 - 4 y1 y3), signed
};

RawW w_normalize_i64(int64_t y1, int64_t y2, int64_t y3) {
    int t = y1 > 0 ? 1 : -1;
    RawW best{};
    bool have = false;
    for (int p : {1, -1}) {
        int64_t twoy1 = 2 * std::abs(y1);
        int64_t target = p * y2;
        int64_t m = target % twoy1;
        if (m < 0) m += twoy1;
        int64_t u = (m - target) / twoy1;
        if (t < 0) u = -u;
        int64_t ny1 = t * y1;
        int64_t ny2 = 2 * y1 * u + p * y2;
        int64_t ny3 = t * (y1 * u * u + p * y2 * u + y3);
        RawW cand{ny1, ny2, ny3, 0};
        if (!have || std::tie(cand.y1, cand.y2, cand.y3) < std::tie(best.y1, best.y2, best.y3)) {
            best = cand;
            have = true;
        }
    }
    best.disc = best.y1 * best.y1 * (best.y2 * best.y2 - 4 * best.y1 * best.y3);
    return best;
}

template <typename Sink>
void sweep_w_y1(int64_t y1, int64_t x_bound, Sink&& sink) {
    int64_t kmax = (x_bound - 1) / (y1 * y1);  // |y2^2 - 4 y1 y3| <= kmax
    if (kmax < 1) return;
    for (int64_t y2 = 0; y2 < 2 * y1; ++y2) {
        int64_t y3lo = ceil_div(y2 * y2 - kmax, 4 * y1);
        int64_t y3hi = floor_div(y2 * y2 + kmax, 4 * y1);
        for (int64_t y3 = y3lo; y3 <= y3hi; ++y3) {
            int64_t k = y2 * y2 - 4 * y1 * y3;
            if (k == 0 || k > kmax || k < -kmax) continue;
            RawW w = w_normalize_i64(y1, y2, y3);
            if (w.y1 != y1 || w.y2 != y2 || w.y3 != y3) continue;  // not the normal form
            sink(w);
        }
    }
}

// V1 iff the quadratic part of the (root-aligned) form splits rationally.
bool wform_is_v1(const RawW& w) {
    int64_t k = w.y2 * w.y2 - 4 * w.y1 * w.y3;
    if (k < 0) return false;
    int64_t s = isqrt64(k);
    if (s * s != k) return false;
    // roots (-y2 +- s) / (2 y1) need not be integral; rationality is enough
    return true;
}

// stabilizer order of the V-class of a canonical reducible representative
int reducible_aut_order(const Form& rep) {
    auto roots = rational_roots(rep);
    if (roots.size() == 1) {
        // Borel stabilizer of the unique zero
        return rep.x2 % rep.x1 == 0 ? 2 : 1;
    }
    return stabilizer_order(rep);
}

struct EnumConfig {
    int sign = +1;
    int64_t x_bound = 0;
    Population pop = Population::Irreducible;
    int threads = 1;
};

// Shared fan-out over leading-coefficient shards; the merge is a sort, so the
// output does not depend on the shard schedule.
std::vector<ClassRecord> enumerate_classes_impl(const EnumConfig& cfg) {
    bool want_irr = cfg.pop == Population::Irreducible || cfg.pop == Population::All;
    bool want_red = cfg.pop == Population::Reducible || cfg.pop == Population::All;

    int64_t amax = 0;
    if (want_irr) {
        double X = static_cast<double>(cfg.x_bound);
        amax = cfg.sign > 0 ? static_cast<int64_t>(2.0 * std::pow(X, 0.25) / std::sqrt(27.0)) + 1
                            : static_cast<int64_t>(std::pow(16.0 * X / 27.0, 0.25)) + 1;
    }
    int64_t y1max = want_red ? isqrt64(std::max<int64_t>(cfg.x_bound - 1, 0)) : 0;

    std::atomic<int64_t> next{1};
    int nthreads = effective_threads(cfg.threads);
    std::vector<std::vector<ClassRecord>> results(nthreads);
    std::vector<std::thread> pool;

    auto worker = [&](int id) {
        auto& out = results[id];
        for (;;) {
            int64_t lead = next.fetch_add(1);
            if (lead > amax + y1max) break;
            if (lead <= amax) {
                auto take = [&](const RawForm& rf) {
                    if (cfg.sign > 0 && !is_reduced_pos_i64(rf)) return;
                    if (cfg.sign < 0 && !is_reduced_neg_i64(rf)) return;
                    if (!irreducible_i64(rf)) return;
                    ClassRecord rec;
                    rec.disc = rf.disc;
                    rec.rep = Form{rf.a, rf.b, rf.c, rf.d};
                    rec.irreducible = true;
                    rec.aut_order = 1;
                    int64_t s = isqrt64(std::abs(rf.disc));
                    if (rf.disc > 0 && s * s == rf.disc) rec.aut_order = stabilizer_order(rec.rep);
                    out.push_back(std::move(rec));
                };
                if (cfg.sign > 0)
                    sweep_pos_a(lead, cfg.x_bound, take);
                else
                    sweep_neg_a(lead, cfg.x_bound, take);
            } else {
                int64_t y1 = lead - amax;
                sweep_w_y1(y1, cfg.x_bound, [&](const RawW& w) {
                    if (cfg.sign > 0 && w.disc < 0) return;
                    if (cfg.sign < 0 && w.disc > 0) return;
                    ClassRecord rec;
                    rec.disc = w.disc;
                    rec.rep = Form{0, w.y1, w.y2, w.y3};
                    rec.irreducible = false;
                    if (wform_is_v1(w)) {
                        // several aligned zeros may share the class; keep only
                        // the canonical alignment
                        if (canonicalize(rec.rep) != rec.rep) return;
                        rec.aut_order = stabilizer_order(rec.rep);
                    } else {
                        rec.aut_order = (w.y2 % w.y1 == 0) ? 2 : 1;
                    }
                    out.push_back(std::move(rec));
                });
            }
        }
    };

    if (!want_irr && !want_red) return {};
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker, i);
    for (auto& th : pool) th.join();

    std::vector<ClassRecord> all;
    for (auto& part : results)
        for (auto& rec : part) all.push_back(std::move(rec));
    std::sort(all.begin(), all.end(), [](const ClassRecord& a, const ClassRecord& b) {
        int64_t pa = std::abs(a.disc), pb = std::abs(b.disc);
        if (pa != pb) return pa < pb;
        return a.rep < b.rep;
    });
    for (std::size_t i = 1; i < all.size(); ++i)
        if (all[i].rep == all[i - 1].rep)
            throw std::logic_error("enumerate_v_classes: duplicate canonical representative");
    return all;
}

}  // namespace

std::vector<ClassRecord> enumerate_v_classes(int sign, const Int& x_bound, Population pop,
                                             int threads) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("enumerate_v_classes: sign");
    if (x_bound < 1) throw std::invalid_argument("enumerate_v_classes: X must be >= 1");
    if (x_bound > kEnumXMax)
        throw std::invalid_argument("enumerate_v_classes: X exceeds the fast-path bound");
    if (pop == Population::WOrbits)
        throw std::invalid_argument("enumerate_v_classes: use enumerate_w_orbits");
    EnumConfig cfg;
    cfg.sign = sign;
    cfg.x_bound = to_i64_checked(x_bound, "enumerate_v_classes");
    cfg.pop = pop;
    cfg.threads = threads;
    return enumerate_classes_impl(cfg);
}

std::vector<WOrbitRecord> enumerate_w_orbits(const Int& x_bound, int threads) {
    if (x_bound < 1) throw std::invalid_argument("enumerate_w_orbits: X must be >= 1");
    if (x_bound > kEnumXMax)
        throw std::invalid_argument("enumerate_w_orbits: X exceeds the fast-path bound");
    int64_t X = to_i64_checked(x_bound, "enumerate_w_orbits");
    int64_t y1max = isqrt64(std::max<int64_t>(X - 1, 0));
    std::atomic<int64_t> next{1};
    int nthreads = effective_threads(threads);
    std::vector<std::vector<WOrbitRecord>> results(nthreads);
    std::vector<std::thread> pool;
    auto worker = [&](int id) {
        auto& out = results[id];
        for (;;) {
            int64_t y1 = next.fetch_add(1);
            if (y1 > y1max) break;
            sweep_w_y1(y1, X, [&](const RawW& w) {
                WOrbitRecord rec;
                rec.y = WForm{w.y1, w.y2, w.y3};
                rec.disc = w.disc;
                rec.abs_disc = std::abs(w.disc);
                rec.stab_order = (w.y2 % w.y1 == 0) ? 2 : 1;
                out.push_back(std::move(rec));
            });
        }
    };
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker, i);
    for (auto& th : pool) th.join();
    std::vector<WOrbitRecord> all;
    for (auto& part : results)
        for (auto& rec : part) all.push_back(std::move(rec));
    std::sort(all.begin(), all.end(), [](const WOrbitRecord& a, const WOrbitRecord& b) {
        if (a.abs_disc != b.abs_disc) return a.abs_disc < b.abs_disc;
        return a.y < b.y;
    });
    return all;
}

ReducibleClass classify_reducible(const Form& f) {
    if (discriminant(f) == 0) throw std::invalid_argument("classify_reducible: degenerate form");
    if (is_irreducible(f)) throw std::invalid_argument("classify_reducible: irreducible form");
    return rational_roots(f).size() == 3 ? ReducibleClass::V1 : ReducibleClass::V2;
}

namespace {

std::array<int64_t, 4> form_key(const Form& f) {
    return {to_i64_checked(f.x0, "form_key"), to_i64_checked(f.x1, "form_key"),
            to_i64_checked(f.x2, "form_key"), to_i64_checked(f.x3, "form_key")};
}

std::set<std::array<int64_t, 4>> box_scan(int sign, int64_t X, int64_t B, Population pop,
                                          int nthreads) {
    std::vector<std::set<std::array<int64_t, 4>>> parts(nthreads);
    std::atomic<int64_t> next{-B};
    std::vector<std::thread> pool;
    auto worker = [&](int id) {
        auto& out = parts[id];
        for (;;) {
            int64_t a = next.fetch_add(1);
            if (a > B) break;
            for (int64_t b = -B; b <= B; ++b) {
                for (int64_t c = -B; c <= B; ++c) {
                    int64_t k2 = -27 * a * a;
                    int64_t k1 = 18 * a * b * c - 4 * b * b * b;
                    int64_t k0 = b * b * c * c - 4 * a * c * c * c;
                    for (int64_t d = -B; d <= B; ++d) {
                        int64_t disc = k0 + d * (k1 + d * k2);
                        if (sign > 0 ? (disc <= 0 || disc >= X) : (disc >= 0 || disc <= -X))
                            continue;
                        Form f{a, b, c, d};
                        bool irr = is_irreducible(f);
                        if (pop == Population::Irreducible && !irr) continue;
                        if (pop == Population::Reducible && irr) continue;
                        out.insert(form_key(canonicalize(f)));
                    }
                }
            }
        }
    };
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker, i);
    for (auto& th : pool) th.join();
    std::set<std::array<int64_t, 4>> merged;
    for (auto& part : parts) merged.merge(part);
    return merged;
}

}  // namespace

std::vector<ClassRecord> brute_force_census(int sign, const Int& x_bound, std::int64_t box,
                                            Population pop, int threads) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("brute_force_census: sign");
    if (x_bound < 1 || x_bound > 100000000)
        throw std::invalid_argument("brute_force_census: X out of range");
    if (box < 1 || box > 5000) throw std::invalid_argument("brute_force_census: box out of range");
    if (pop == Population::WOrbits) throw std::invalid_argument("brute_force_census: population");
    int64_t X = to_i64_checked(x_bound, "brute_force_census");
    int nthreads = effective_threads(threads);
    auto small = box_scan(sign, X, box, pop, nthreads);
    auto large = box_scan(sign, X, 2 * box, pop, nthreads);
    if (small != large)
        throw IncompleteBoxError("brute_force_census: class set changed between box and 2*box");
    std::vector<ClassRecord> out;
    for (const auto& key : small) {
        ClassRecord rec;
        rec.rep = Form{key[0], key[1], key[2], key[3]};
        rec.disc = to_i64_checked(discriminant(rec.rep), "brute_force_census disc");
        rec.irreducible = is_irreducible(rec.rep);
        rec.aut_order = rec.irreducible ? stabilizer_order(rec.rep) : reducible_aut_order(rec.rep);
        out.push_back(std::move(rec));
    }
    std::sort(out.begin(), out.end(), [](const ClassRecord& a, const ClassRecord& b) {
        int64_t pa = std::abs(a.disc), pb = std::abs(b.disc);
        if (pa != pb) return pa < pb;
        return a.rep < b.rep;
    });
    return out;
}

std::int64_t CensusTable::cumulative_count(std::int64_t below) const {
    std::int64_t total = 0;
    for (const auto& [absdisc, entry] : entries) {
        if (absdisc >= below) break;
        total += entry.count;
    }
    return total;
}

Rat CensusTable::cumulative_weighted(std::int64_t below) const {
    std::int64_t sixths = 0;
    for (const auto& [absdisc, entry] : entries) {
        if (absdisc >= below) break;
        sixths += entry.weighted_sixths;
    }
    return Rat(sixths, 6);
}

CensusTable run_census(const CensusRequest& req) {
    if (req.x_bound < 1) throw std::invalid_argument("run_census: X must be >= 1");
    {
        std::set<Int> primes;
        for (const auto& [p, sym] : req.conditions) {
            (void)sym;
            if (!primes.insert(p).second)
                throw std::invalid_argument("run_census: duplicate condition prime");
        }
    }
    CensusTable table;
    table.request = req;
    auto matches = [&](const Form& rep) {
        for (const auto& [p, sym] : req.conditions)
            if (splitting_symbol(rep, p) != sym) return false;
        return true;
    };
    auto add = [&](std::int64_t absdisc, const Form& rep, int aut) {
        auto [it, fresh] = table.entries.try_emplace(absdisc);
        auto& e = it->second;
        e.count += 1;
        e.weighted_sixths += 6 / aut;
        if (fresh || rep < e.rep) e.rep = rep;
    };
    if (req.population == Population::WOrbits) {
        for (const auto& rec : enumerate_w_orbits(req.x_bound, req.threads)) {
            if (req.sign > 0 ? rec.disc < 0 : rec.disc > 0) continue;
            Form rep = rec.y.as_form();
            if (!matches(rep)) continue;
            add(rec.abs_disc, rep, rec.stab_order);
        }
    } else {
        for (const auto& rec :
             enumerate_v_classes(req.sign, req.x_bound, req.population, req.threads)) {
            if (!matches(rec.rep)) continue;
            add(std::abs(rec.disc), rec.rep, rec.aut_order);
        }
    }
    return table;
}

std::vector<Int> geometric_checkpoints(const Int& x_bound) {
    std::vector<Int> cps;
    for (Int x = x_bound; x >= 1; x /= 2) cps.push_back(x);
    std::reverse(cps.begin(), cps.end());
    return cps;
}

std::vector<CheckpointRow> partial_sum_table(const CensusTable& table,
                                             const std::vector<Int>& checkpoints) {
    std::vector<CheckpointRow> rows;
    for (const Int& cp : checkpoints) {
        CheckpointRow row;
        row.x_prime = cp;
        std::int64_t below = to_i64_checked(cp, "partial_sum_table");
        row.h = table.cumulative_count(below);
        row.h_weighted = table.cumulative_weighted(below);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace cubic
