#ifndef CUBIC_LOCALTYPES_HPP
#define CUBIC_LOCALTYPES_HPP

#include <optional>
#include <string>

#include "cubic/form.hpp"
#include "cubic/numeric.hpp"

namespace cubic {

// Splitting type of the etale cubic algebra Q_p(f): factor degrees with
// ramification marked by a superscript.
enum class SplittingSymbol {
    S111,   // (111)  Q_p x Q_p x Q_p
    S21,    // (21)   Q_p x unramified quadratic
    S3,     // (3)    unramified cubic field
    S121R,  // (1^2 1) Q_p x ramified quadratic
    S13R,   // (1^3)  totally ramified cubic field
};

std::string to_string(SplittingSymbol s);  // "111", "21", "3", "121r", "13r"
std::optional<SplittingSymbol> symbol_from_string(const std::string& s);
bool symbol_is_ramified(SplittingSymbol s);

struct PAdicContext {
    Int p;
    // Refinement-depth budget for root isolation; 0 picks 2*v_p(disc) + 10.
    int precision = 0;
    int escalation_cap = 512;
};

// Thrown when the refinement budget is exhausted even at the escalation cap.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class QuadraticType { Split, Unramified, Ramified };

// R^3 iff P(f) > 0.
ArchType arch_type(const Form& f);

// Fast path for p not dividing P(f): count the zeros of f on P^1(F_p).
SplittingSymbol symbol_mod_p(const Form& f, const Int& p);

// Full p-adic classification, any p with P(f) != 0. Exact: root counting in
// Z_p and, for locally irreducible cubics, a root search in the unramified
// cubic extension.
SplittingSymbol symbol_padic(const Form& f, const PAdicContext& ctx);

// Type of Q_p(sqrt(D)) for nonzero rational D.
QuadraticType quadratic_ramification(const Rat& D, const Int& p);

// Dispatcher: mod-p path when p does not divide P(f), p-adic path otherwise.
SplittingSymbol splitting_symbol(const Form& f, const Int& p);

// Deterministic Miller-Rabin, exact for p < 3.3e14 (all CLI-range inputs).
bool is_prime(const Int& n);

}  // namespace cubic

#endif
