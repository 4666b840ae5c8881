#ifndef CUBIC_CENSUS_HPP
#define CUBIC_CENSUS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "cubic/form.hpp"
#include "cubic/localtypes.hpp"
#include "cubic/numeric.hpp"
#include "cubic/wform.hpp"

namespace cubic {

enum class Population { Irreducible, Reducible, All, WOrbits };

struct CensusRequest {
    int sign = +1;  // +1: 0 < P < X, -1: 0 < -P < X (ignored for WOrbits: |P| < X)
    Int x_bound;
    std::vector<std::pair<Int, SplittingSymbol>> conditions;  // distinct primes
    Population population = Population::Irreducible;
    int threads = 1;  // 0 = hardware concurrency
};

struct ClassRecord {
    std::int64_t disc = 0;  // signed
    Form rep;               // canonical representative
    int aut_order = 1;
    bool irreducible = false;
};

struct WOrbitRecord {
    WForm y;                     // B(Z)-normal form
    std::int64_t disc = 0;       // y1^2 (y2^2 - 4 y1 y3), signed
    std::int64_t abs_disc = 0;
    int stab_order = 1;
};

struct IncompleteBoxError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One canonical representative per GL2(Z)-class with 0 < sign*P < X, ordered
// by (|P|, lex). The enumeration loop bounds are derived from the reduction
// domains; completeness is enforced against brute_force_census in the tests.
std::vector<ClassRecord> enumerate_v_classes(int sign, const Int& x_bound,
                                             Population pop = Population::Irreducible,
                                             int threads = 1);

// Independent oracle: canonicalize everything in the coefficient box
// [-box, box]^4 with 0 < sign*P < X, dedup; rerun with 2*box and require the
// same class set (throws IncompleteBoxError otherwise).
std::vector<ClassRecord> brute_force_census(int sign, const Int& x_bound, std::int64_t box,
                                            Population pop = Population::Irreducible,
                                            int threads = 1);

enum class ReducibleClass { V1, V2 };  // split x three rational lines vs one

ReducibleClass classify_reducible(const Form& f);

// One representative per B(Z)-orbit of nondegenerate W-forms with
// 0 < |disc| < X, ordered by (|disc|, lex).
std::vector<WOrbitRecord> enumerate_w_orbits(const Int& x_bound, int threads = 1);

struct CensusEntry {
    std::int64_t count = 0;
    std::int64_t weighted_sixths = 0;  // 6 * sum of 1/aut over the classes
    Form rep;                          // lex-least canonical representative
};

struct CensusTable {
    CensusRequest request;
    std::map<std::int64_t, CensusEntry> entries;  // keyed by |disc|

    std::int64_t cumulative_count(std::int64_t below) const;  // strict <
    Rat cumulative_weighted(std::int64_t below) const;
};

CensusTable run_census(const CensusRequest& req);

struct CheckpointRow {
    Int x_prime;
    std::int64_t h = 0;
    Rat h_weighted;
};

// Cumulative series at the given bounds (ascending).
std::vector<CheckpointRow> partial_sum_table(const CensusTable& table,
                                             const std::vector<Int>& checkpoints);
// X, X/2, X/4, ... down to 1, ascending.
std::vector<Int> geometric_checkpoints(const Int& x_bound);

}  // namespace cubic

#endif
