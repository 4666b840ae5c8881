#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cubic/form.hpp"
#include "cubic/introots.hpp"
#include "cubic/wform.hpp"

using namespace cubic;

namespace {

// words in generators of GL2(Z) for randomized orbit sampling
Transform random_word(std::mt19937& rng, int max_len = 8) {
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<int> pick(0, 3);
    Transform g{1, 0, 0, 1};
    auto mul = [](const Transform& x, const Transform& y) {
        return Transform{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                         x.c * y.b + x.d * y.d};
    };
    const Transform gens[] = {
        {0, 1, 1, 0},    // swap (det -1)
        {1, 1, 0, 1},    // shear
        {1, -1, 0, 1},   // inverse shear
        {-1, 0, 0, 1},   // flip (det -1)
    };
    int n = len(rng);
    for (int i = 0; i < n; ++i) g = mul(g, gens[pick(rng)]);
    return g;
}

Form random_nondegenerate(std::mt19937& rng, int range = 8) {
    std::uniform_int_distribution<int> coeff(-range, range);
    for (;;) {
        Form f{coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
        if (discriminant(f) != 0) return f;
    }
}

// escalating bounded search, the oracle the reduced paths are checked against
int stab_order_bounded_search(const Form& f) {
    Int target = discriminant(f);
    REQUIRE(target != 0);
    int prev = -1;
    for (int bound = 3; bound <= 24; bound *= 2) {
        int count = 0;
        for (int a = -bound; a <= bound; ++a)
            for (int b = -bound; b <= bound; ++b)
                for (int c = -bound; c <= bound; ++c)
                    for (int d = -bound; d <= bound; ++d) {
                        Transform g{a, b, c, d};
                        Int det = g.det();
                        if (det != 1 && det != -1) continue;
                        if (act(g, f) == f) ++count;
                    }
        if (count == prev) return count;  // stable under escalation
        prev = count;
    }
    return prev;
}

}  // namespace

TEST_CASE("discriminant on the reference forms") {
    CHECK(discriminant(Form{1, 1, 1, 1}) == -16);
    CHECK(discriminant(Form{1, 0, 0, 0}) == 0);
    CHECK(discriminant(Form{1, 1, -2, -1}) == 49);
    CHECK(discriminant(Form{1, 0, -1, -1}) == -23);
}

TEST_CASE("twisted action") {
    Form f{1, 2, 3, 4};
    CHECK(act(Transform{1, 0, 0, 1}, f) == f);
    CHECK(act(Transform{0, 1, 1, 0}, f) == Form{-4, -3, -2, -1});
    CHECK(act(Transform{-1, 0, 0, 1}, Form{1, 0, -1, -1}) == Form{1, 0, -1, 1});
    CHECK_THROWS_AS(act(Transform{2, 0, 0, 1}, f), std::invalid_argument);
}

TEST_CASE("discriminant is invariant under the action") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        Form f = random_nondegenerate(rng);
        Transform g = random_word(rng);
        CHECK(discriminant(act(g, f)) == discriminant(f));
    }
}

TEST_CASE("hessian discriminant is -3 P") {
    CHECK(hessian(Form{1, 0, -1, -1}).disc() == 69);
    CHECK(hessian(Form{1, 1, 1, 1}).disc() == 48);
    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
        Form f = random_nondegenerate(rng);
        CHECK(hessian(f).disc() == -3 * discriminant(f));
        if (discriminant(f) > 0) {
            // definite, and positive definite in this normalization
            CHECK(hessian(f).disc() < 0);
            CHECK(hessian(f).p > 0);
        }
    }
    CHECK_THROWS_AS(hessian(Form{1, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("irreducibility") {
    CHECK_FALSE(is_irreducible(Form{1, 0, -1, 0}));
    CHECK(is_irreducible(Form{1, 0, -1, -1}));
    CHECK_FALSE(is_irreducible(Form{0, 1, 0, -1}));
    CHECK(is_irreducible(Form{1, 1, -2, -1}));
    CHECK_FALSE(is_irreducible(Form{2, 0, -2, 0}));  // content does not hide roots
}

TEST_CASE("rational roots of reference forms") {
    auto r1 = rational_roots(Form{1, 0, -1, 0});
    REQUIRE(r1.size() == 3);  // 0, 1, -1
    auto r2 = rational_roots(Form{0, 1, 0, -1});
    REQUIRE(r2.size() == 3);  // infinity, 1, -1
    CHECK(r2[0] == std::pair<Int, Int>{-1, 1});
    auto r3 = rational_roots(Form{1, 0, 1, 0});
    REQUIRE(r3.size() == 1);
    CHECK(r3[0] == std::pair<Int, Int>{0, 1});
}

TEST_CASE("canonicalize is constant on orbits and idempotent") {
    std::mt19937 rng(23);
    for (int i = 0; i < 100; ++i) {
        Form f = random_nondegenerate(rng);
        Transform g = random_word(rng);
        Form c1 = canonicalize(f);
        Form c2 = canonicalize(act(g, f));
        CHECK(c1 == c2);
        CHECK(canonicalize(c1) == c1);
    }
    CHECK_THROWS_AS(canonicalize(Form{0, 0, 1, 0}), std::invalid_argument);
}

TEST_CASE("equivalence of the diag-flipped pair") {
    CHECK(are_equivalent(Form{1, 0, -1, -1}, Form{1, 0, -1, 1}));
    CHECK(are_equivalent(Form{1, 0, -1, -1}, Form{1, 0, -1, -1}));
    CHECK_FALSE(are_equivalent(Form{1, 0, -1, -1}, Form{1, 1, -2, -1}));
}

TEST_CASE("stabilizer orders") {
    CHECK(stabilizer_order(Form{1, 0, -1, -1}) == 1);
    CHECK(stabilizer_order(Form{1, 1, -2, -1}) == 3);
    CHECK(stabilizer_order(Form{1, 0, -3, -1}) == 3);  // disc 81, cyclic
    CHECK(stabilizer_order(Form{1, 0, 1, 0}) == stab_order_bounded_search(Form{1, 0, 1, 0}));
    CHECK(stabilizer_order(Form{0, 1, 1, 0}) == 6);  // three rational zeros, full S3
    CHECK(stabilizer_order(Form{0, 1, 0, -1}) == stab_order_bounded_search(Form{0, 1, 0, -1}));
}

TEST_CASE("stabilizer against the bounded search on random small forms") {
    std::mt19937 rng(41);
    int checked = 0;
    while (checked < 25) {
        Form f = random_nondegenerate(rng, 3);
        int direct = stabilizer_order(f);
        CHECK(direct == stab_order_bounded_search(f));
        ++checked;
    }
}

TEST_CASE("irreducible stabilizers are 1 or 3, and 3 needs a square disc") {
    std::mt19937 rng(57);
    for (int i = 0; i < 120; ++i) {
        Form f = random_nondegenerate(rng);
        if (!is_irreducible(f)) continue;
        int s = stabilizer_order(f);
        CHECK((s == 1 || s == 3));
        if (s == 3) {
            CHECK(discriminant(f) > 0);
            CHECK(is_perfect_square(discriminant(f)));
        }
    }
}

TEST_CASE("ring invariants bundle") {
    auto inv = ring_invariants(Form{1, 1, -2, -1});
    CHECK(inv.disc == 49);
    CHECK(inv.irreducible);
    CHECK(inv.aut_order == 3);
    CHECK(inv.arch == ArchType::R3);

    inv = ring_invariants(Form{1, 0, -1, -1});
    CHECK(inv.disc == -23);
    CHECK(inv.irreducible);
    CHECK(inv.aut_order == 1);
    CHECK(inv.arch == ArchType::RxC);

    inv = ring_invariants(Form{1, 0, 1, 0});
    CHECK(inv.disc == -4);
    CHECK_FALSE(inv.irreducible);
    CHECK(inv.aut_order == 2);
    CHECK(inv.arch == ArchType::RxC);
}

TEST_CASE("form csv round trip") {
    Form f{12, -3, 0, 7};
    CHECK(form_from_csv(to_csv(f)) == f);
    CHECK(to_csv(f) == "12,-3,0,7");
}

TEST_CASE("monic integer roots") {
    auto r = monic_cubic_integer_roots(0, -1, 0);  // U^3 - U
    REQUIRE(r.size() == 3);
    CHECK(r[0] == -1);
    CHECK(r[2] == 1);
    CHECK(monic_cubic_integer_roots(0, -1, -1).empty());  // U^3 - U - 1
    // huge coefficients stay exact: roots 10^9, -10^9, 3
    Int e9("1000000000");
    auto big = monic_cubic_integer_roots(-3, -e9 * e9, 3 * e9 * e9);
    REQUIRE(big.size() == 3);
    CHECK(big[0] == -e9);
    CHECK(big[1] == 3);
    CHECK(big[2] == e9);
    auto q = monic_quadratic_integer_roots(-5, 6);  // (U-2)(U-3)
    REQUIRE(q.size() == 2);
    CHECK(q[0] == 2);
    CHECK(q[1] == 3);
}

TEST_CASE("w-form normalization and stabilizer") {
    std::mt19937 rng(91);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> upick(-4, 4);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int i = 0; i < 300; ++i) {
        WForm y{coeff(rng), coeff(rng), coeff(rng)};
        if (y.y1 == 0 || w_disc(y) == 0) continue;
        WForm n = w_normalize(y);
        CHECK(n.y1 > 0);
        CHECK(n.y2 >= 0);
        CHECK(n.y2 < 2 * n.y1);
        CHECK(w_disc(n) == w_disc(y));
        // constant on the orbit
        WForm moved = borel_apply(y, sign(rng) ? 1 : -1, sign(rng) ? 1 : -1, upick(rng));
        CHECK(w_normalize(moved) == n);
        CHECK(w_normalize(n) == n);
        // stabilizer formula vs direct solve over a small window
        int direct = 0;
        for (int t : {1, -1})
            for (int p : {1, -1})
                for (int u = -6; u <= 6; ++u)
                    if (borel_apply(n, t, p, u) == n) ++direct;
        CHECK(w_stab_order(n) == direct);
    }
}
