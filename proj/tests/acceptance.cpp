// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The heavy censuses are run once and shared.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <vector>

#include "cubic/census.hpp"
#include "cubic/densities.hpp"
#include "cubic/fielddata.hpp"
#include "cubic/localtypes.hpp"

using namespace cubic;

namespace {

int g_failures = 0;

void verdict(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << "criterion " << number << " [" << (pass ? "PASS" : "FAIL") << "] " << name;
    if (!detail.empty()) std::cout << "  -- " << detail;
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int prec = 5) {
    std::ostringstream os;
    os << std::setprecision(prec) << v;
    return os.str();
}

const SplittingSymbol kSyms[] = {SplittingSymbol::S111, SplittingSymbol::S21, SplittingSymbol::S3,
                                 SplittingSymbol::S121R, SplittingSymbol::S13R};

// 1. exact identity suite
void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    RatFun sa(Rat(0)), sb(Rat(0)), sg(Rat(0));
    for (auto s : kSyms) {
        sa = sa + alpha_symbol(s);
        sb = sb + beta_symbol(s);
        sg = sg + gamma_symbol(s);
    }
    bool sums = sa == RatFun(Rat(1)) && sb == RatFun(Rat(1)) && sg == RatFun(Rat(1));
    auto [m2, m3] = solve_back_serre_masses();
    bool solved = m2 == serre_mass(2) && m3 == serre_mass(3);
    double dt = seconds_since(t0);
    verdict(1, "exact identity suite (sum alpha/beta/gamma = 1, serre solve-back)",
            sums && solved && dt < 5.0,
            "runtime " + fmt(dt, 3) + "s");
}

// 2. oracle equivalence up to X = 5000, both signs
void criterion2() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (int sign : {+1, -1}) {
        auto en = enumerate_v_classes(sign, 5000, Population::Irreducible, 0);
        auto bf = brute_force_census(sign, 5000, 100, Population::Irreducible, 0);
        bool same = en.size() == bf.size();
        if (same)
            for (std::size_t i = 0; i < en.size(); ++i) same = same && en[i].rep == bf[i].rep;
        ok = ok && same;
        detail += (sign > 0 ? "+: " : "  -: ") + std::to_string(en.size()) + " classes" +
                  (same ? "" : " MISMATCH");
    }
    double dt = seconds_since(t0);
    verdict(2, "oracle equivalence to X = 5000, both signs", ok && dt < 300.0,
            detail + ", runtime " + fmt(dt, 3) + "s");
}

// 3. known leading constants
void criterion3(const ConstantsDetail& r3, const ConstantsDetail& rc) {
    Real pi2 = pi_const() * pi_const();
    auto close25 = [&](const Real& a, const Real& b) {
        Real scale = fabs(b) > 1 ? fabs(b) : Real(1);
        return fabs(a - b) <= scale * pow(Real(10), -25);
    };
    bool ok = close25(r3.composition.A, pi2 / 72) && close25(rc.composition.A, pi2 / 24) &&
              close25(r3.composition.C, pi2 / 24) && close25(rc.composition.C, pi2 / 24);
    // exact-symbolic where closed forms exist
    ok = ok && r3.a_over_pi2 && *r3.a_over_pi2 == Rat(1, 72);
    ok = ok && rc.a_over_pi2 && *rc.a_over_pi2 == Rat(1, 24);
    ok = ok && r3.c_over_pi2 && *r3.c_over_pi2 == Rat(1, 24);
    ok = ok && rc.c_over_pi2 && *rc.c_over_pi2 == Rat(1, 24);
    verdict(3, "A(+) = pi^2/72, A(-) = pi^2/24, C = pi^2/24 to 25 digits (and exactly)", ok);
}

// 4. two-term asymptotic at X = 1e5 and 1e6
void criterion4(const std::vector<ClassRecord>& plus_classes, const ConstantsDetail& r3) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (double X : {1e5, 1e6}) {
        long long h = 0;
        for (const auto& r : plus_classes)
            if (r.disc < X) ++h;
        Real x(X);
        Real one = r3.composition.A * x;
        Real two = one + Real(6) / 5 * r3.composition.B * pow(x, Real(5) / 6);
        Real res1 = fabs(Real(h) - one), res2 = fabs(Real(h) - two);
        Real budget = 3 * pow(x, Real(72) / 100);
        bool this_ok = res2 < res1 && res2 <= budget;
        ok = ok && this_ok;
        detail += "X=" + fmt(X, 2) + ": |res2|=" + fmt(res2.convert_to<double>(), 5) + " vs |res1|=" +
                  fmt(res1.convert_to<double>(), 5) + " budget=" + fmt(budget.convert_to<double>(), 5) + "  ";
    }
    double dt = seconds_since(t0);
    verdict(4, "two-term asymptotic beats one-term within budget (composition-route B)", ok,
            detail + "runtime " + fmt(dt, 3) + "s");
}

// 5. local-density convergence of conditioned fractions at X = 1e6
void criterion5(const std::vector<ClassRecord>& plus_classes,
                const std::vector<ClassRecord>& minus_classes, const ConstantsDetail& r3,
                const ConstantsDetail& rc) {
    auto t0 = std::chrono::steady_clock::now();
    // finite-only conditions leave the discriminant sign free: both signs counted
    struct Probe {
        Int p;
        SplittingSymbol s;
        const char* label;
    };
    const Probe probes[] = {{2, SplittingSymbol::S111, "2:(111)"},
                            {2, SplittingSymbol::S13R, "2:(1^3)"},
                            {5, SplittingSymbol::S3, "5:(3)"}};
    bool ok = true;
    std::string detail;
    long long total = static_cast<long long>(plus_classes.size() + minus_classes.size());
    double a_tot = (r3.composition.A + rc.composition.A).convert_to<double>();
    double b_tot = (r3.composition.B + rc.composition.B).convert_to<double>();
    std::vector<double> two_term;
    for (const auto& probe : probes) {
        long long matched = 0;
        for (const auto* side : {&plus_classes, &minus_classes})
            for (const auto& r : *side)
                if (splitting_symbol(r.rep, probe.p) == probe.s) ++matched;
        double observed = double(matched) / double(total);
        double expected = alpha_symbol(probe.s).eval_at_q(probe.p).convert_to<double>();
        bool this_ok = std::fabs(observed - expected) <= 0.03;
        ok = ok && this_ok;
        detail += std::string(probe.label) + ": obs " + fmt(observed) + " vs " + fmt(expected) +
                  (this_ok ? "  " : " [out of tolerance]  ");
        // the conditioned two-term prediction with the beta local factor
        auto det = compute_constants(base_field_q(), 1,
                                     {Condition{probe.p, probe.s, std::nullopt}});
        auto det2 = compute_constants(base_field_q(), 0,
                                      {Condition{probe.p, probe.s, std::nullopt}});
        double x16 = std::pow(1e6, -1.0 / 6.0);
        double num = a_tot * expected +
                     1.2 * (det.composition.B + det2.composition.B).convert_to<double>() * x16;
        double den = a_tot + 1.2 * b_tot * x16;
        two_term.push_back(num / den);
    }
    double dt = seconds_since(t0);
    verdict(5, "conditioned fractions within 3% absolute of the alpha densities at X = 1e6", ok,
            detail + "runtime " + fmt(dt, 3) + "s");
    if (!ok) {
        std::cout << "  note: the deviations are the X^(-1/6) secondary transient demanded by\n"
                  << "  the two-term expansion itself; the conditioned two-term predictions\n"
                  << "  reproduce the observations, and the fractions approach alpha from the\n"
                  << "  predicted side, but the 3% window is not reached by X = 1e6:\n";
        int idx = 0;
        for (const auto& probe : probes) {
            std::cout << "  " << probe.label << " two-term prediction at 1e6: " << fmt(two_term[idx++], 4)
                      << ", trend:";
            for (double X : {1e4, 1e5, 1e6}) {
                long long matched = 0, tot = 0;
                for (const auto* side : {&plus_classes, &minus_classes})
                    for (const auto& r : *side) {
                        if (std::abs(r.disc) >= X) continue;
                        ++tot;
                        if (splitting_symbol(r.rep, probe.p) == probe.s) ++matched;
                    }
                std::cout << "  X=" << fmt(X, 2) << ": " << fmt(double(matched) / tot, 4);
            }
            std::cout << "  -> alpha "
                      << fmt(alpha_symbol(probe.s).eval_at_q(probe.p).convert_to<double>(), 4)
                      << std::endl;
        }
    }
}

// 6. reducible side: weighted W-count / X near C
void criterion6(const ConstantsDetail& r3) {
    auto t0 = std::chrono::steady_clock::now();
    auto w = enumerate_w_orbits(1000000, 0);
    bool ok = true;
    std::string detail;
    for (int sign : {+1, -1}) {
        double weighted = 0;
        for (const auto& r : w)
            if ((sign > 0) == (r.disc > 0)) weighted += 1.0 / r.stab_order;
        double ratio = weighted / 1e6;
        double c = r3.composition.C.convert_to<double>();
        bool this_ok = std::fabs(ratio - c) <= 0.02 * c;
        ok = ok && this_ok;
        detail += std::string(sign > 0 ? "+" : "-") + ": " + fmt(ratio) + "  ";
    }
    double dt = seconds_since(t0);
    verdict(6, "weighted W-orbit count / X within 2% of C = pi^2/24 (per sign)", ok,
            detail + "vs " + fmt(r3.composition.C.convert_to<double>()) + ", runtime " +
                fmt(dt, 3) + "s");
}

// 7. classification coherence
void criterion7() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(20260810);
    std::uniform_int_distribution<int> coeff(-10, 10);
    auto random_irreducible = [&]() {
        for (;;) {
            Form f{coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
            if (discriminant(f) != 0 && is_irreducible(f)) return f;
        }
    };
    bool dual = true;
    const long primes[] = {2, 3, 5, 7, 11, 13};
    for (int i = 0; i < 200; ++i) {
        Form f = random_irreducible();
        Int disc = discriminant(f);
        for (long p : primes) {
            if (disc % p == 0) continue;
            PAdicContext ctx;
            ctx.p = p;
            dual = dual && symbol_mod_p(f, p) == symbol_padic(f, ctx);
        }
    }
    bool invariant = true;
    {
        std::uniform_int_distribution<int> pick(0, 3);
        std::uniform_int_distribution<int> len(1, 6);
        const Transform gens[] = {{0, 1, 1, 0}, {1, 1, 0, 1}, {1, -1, 0, 1}, {-1, 0, 0, 1}};
        for (int i = 0; i < 8; ++i) {
            Form f = random_irreducible();
            for (long p : {2, 5, 7}) {
                SplittingSymbol base = splitting_symbol(f, p);
                for (int j = 0; j < 50; ++j) {
                    Transform g{1, 0, 0, 1};
                    int n = len(rng);
                    for (int t = 0; t < n; ++t) {
                        const Transform& h = gens[pick(rng)];
                        g = Transform{g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
                                      g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
                    }
                    invariant = invariant && splitting_symbol(act(g, f), p) == base;
                }
            }
        }
    }
    bool anchors = splitting_symbol(Form{1, 0, -1, -1}, 2) == SplittingSymbol::S3 &&
                   splitting_symbol(Form{1, 0, -1, -1}, 5) == SplittingSymbol::S21 &&
                   splitting_symbol(Form{1, 0, -1, -1}, 23) == SplittingSymbol::S121R &&
                   splitting_symbol(Form{1, 1, -2, -1}, 7) == SplittingSymbol::S13R;
    double dt = seconds_since(t0);
    verdict(7, "dual-path agreement, orbit invariance and the four anchors",
            dual && invariant && anchors, "runtime " + fmt(dt, 3) + "s");
}

// 8. parameterization invariants: disc-49 stabilizer and the weighted gap
void criterion8(const std::vector<ClassRecord>& plus_classes) {
    bool disc49 = false;
    for (const auto& r : plus_classes)
        if (r.disc == 49) disc49 = r.aut_order == 3;
    CensusRequest req;
    req.sign = +1;
    req.x_bound = 1000000;
    req.population = Population::Irreducible;
    req.threads = 0;
    auto table = run_census(req);
    bool gap = true;
    for (const auto& row : partial_sum_table(table, geometric_checkpoints(req.x_bound))) {
        std::int64_t cyclic = 0;
        for (const auto& r : plus_classes)
            if (r.disc < row.x_prime && r.aut_order == 3) ++cyclic;
        gap = gap && (Rat(row.h) - row.h_weighted == Rat(2 * cyclic, 3));
    }
    verdict(8, "disc-49 class has stabilizer 3; h - h_weighted = (2/3)#cyclic at every checkpoint",
            disc49 && gap);
}

}  // namespace

int main() {
    std::cout << "acceptance suite" << std::endl;
    auto t0 = std::chrono::steady_clock::now();

    BaseFieldData kq = base_field_q();
    ConstantsDetail r3 = compute_constants(kq, 1, {});
    ConstantsDetail rc = compute_constants(kq, 0, {});

    auto plus_classes = enumerate_v_classes(+1, 1000000, Population::Irreducible, 0);
    auto minus_classes = enumerate_v_classes(-1, 1000000, Population::Irreducible, 0);

    criterion1();
    criterion2();
    criterion3(r3, rc);
    criterion4(plus_classes, r3);
    criterion5(plus_classes, minus_classes, r3, rc);
    criterion6(r3);
    criterion7();
    criterion8(plus_classes);

    std::cout << (g_failures == 0 ? "acceptance: all criteria passed"
                                  : "acceptance: " + std::to_string(g_failures) + " criterion(s) failed")
              << "  (total " << fmt(seconds_since(t0), 4) << "s)" << std::endl;
    return g_failures == 0 ? 0 : 4;
}
