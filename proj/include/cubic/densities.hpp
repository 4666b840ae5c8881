#ifndef CUBIC_DENSITIES_HPP
#define CUBIC_DENSITIES_HPP

#include <optional>
#include <vector>

#include "cubic/fielddata.hpp"
#include "cubic/localtypes.hpp"
#include "cubic/numeric.hpp"
#include "cubic/ratfun.hpp"
#include "cubic/realconst.hpp"

namespace cubic {

// Local data of an etale cubic algebra class: symbol, automorphism count and
// the exponent of the norm of its discriminant (Delta = q^delta_exponent).
struct EtaleClassData {
    SplittingSymbol symbol = SplittingSymbol::S111;
    int theta = 6;
    int delta_exponent = 0;
};

// The five standard class shapes; the ramified ones are the tame classes
// (delta exponents 1 and 2).
EtaleClassData etale_class(SplittingSymbol s);

// Local zeta function of the algebra with the given splitting type, as an
// exact rational function of u = q^{-1/3}; s must have denominator dividing 3.
RatFun zeta_L(SplittingSymbol s, const Rat& exponent);

// Explicit local orbital zeta (1-q^{-4s})^{-1} (1-q^{-6s+1})^{-1}
//   * zeta_L(2s) / zeta_L(4s).
RatFun omega_L(SplittingSymbol s, const Rat& exponent);

// Per-class local densities, exact in u (t = u^3 = q^{-1}).
RatFun alpha_class(const EtaleClassData& c);
RatFun beta_class(const EtaleClassData& c);
RatFun gamma_class(const EtaleClassData& c);

// Independent routes through the explicit orbital zeta; must agree with
// alpha_class / beta_class symbolically.
RatFun alpha_class_via_omega(const EtaleClassData& c);
RatFun beta_class_via_omega(const EtaleClassData& c);

// Mass of the totally ramified degree-i extensions: q^{-(i-1)}.
RatFun serre_mass(int i);

// Per-symbol aggregates: the class sum of theta^{-1} Delta^{-1} collapses to
// {1/6, 1/2, 1/3, serre_mass(2), serre_mass(3)}.
RatFun alpha_symbol(SplittingSymbol s);
RatFun beta_symbol(SplittingSymbol s);
RatFun gamma_symbol(SplittingSymbol s);

// Aggregates with the ramified masses replaced by arbitrary functions, for
// the solve-back test and for negative controls.
RatFun alpha_sum_with_masses(const RatFun& m2, const RatFun& m3);
RatFun beta_sum_with_masses(const RatFun& m2, const RatFun& m3);
RatFun gamma_sum_with_mass(const RatFun& m2);

// Solves { alpha-sum = 1, beta-sum = 1 } for the two ramified masses;
// the unique solution must be (q^{-1}, q^{-2}).
std::pair<RatFun, RatFun> solve_back_serre_masses();

enum class ArchPlace { R3, RxC, C3 };
enum class DensityKind { Alpha, Beta, Gamma };

Real arch_factor(DensityKind kind, ArchPlace place);

struct Condition {
    Int p;
    SplittingSymbol symbol;
    std::optional<EtaleClassData> fine_class;  // class-level override
};

struct GlobalConstants {
    Real A = Real(0);
    Real B = Real(0);
    Real C = Real(0);
};

struct PlaceFactors {
    Int p;
    SplittingSymbol symbol;
    Rat alpha, gamma;  // exact values at t = 1/p
    Real beta;         // genuinely involves p^{-1/3}; evaluated at full precision
};

struct ConstantsDetail {
    GlobalConstants composition;  // normative route: residue theorem x table x local factors
    GlobalConstants closed_form;  // verbatim closed forms (A agrees; B differs by a constant)
    Real b_ratio = Real(0);       // closed_form.B / composition.B (0 when B vanishes)
    std::optional<Rat> a_over_pi2;  // exact A/pi^2 for the rational base field
    std::optional<Rat> c_over_pi2;  // exact C/pi^2 for the rational base field
    std::vector<PlaceFactors> finite_factors;
};

// i_infinity = number of real places carrying R^3 (for Q: 1 for totally real
// census, 0 for the complex one).
ConstantsDetail compute_constants(const BaseFieldData& k, int i_infinity,
                                  const std::vector<Condition>& conds);

struct SteinitzInput {
    bool is_cube = true;  // tau of the class
};

// (residue at 1, residue at 5/6) of the class-restricted series.
std::pair<Real, Real> steinitz_residues(const BaseFieldData& k, const GlobalConstants& g,
                                        const SteinitzInput& st);

}  // namespace cubic

#endif
