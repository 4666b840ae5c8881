#ifndef CUBIC_REALCONST_HPP
#define CUBIC_REALCONST_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "cubic/numeric.hpp"

namespace cubic {

// Working precision: 50 decimal digits (acceptance thresholds are at 25).
using Real = boost::multiprecision::cpp_bin_float_50;
using Real100 = boost::multiprecision::cpp_bin_float_100;

Real pi_const();
Real sqrt3_const();

// Riemann zeta for real s (s != 1): Borwein's alternating-series algorithm.
Real zeta_borwein(const Real& s);
// Independent second route: Euler-Maclaurin with exact Bernoulli numbers.
Real zeta_euler_maclaurin(const Real& s);

// Gamma for real x > 0: Spouge's approximation.
Real gamma_spouge(const Real& x);
// Independent second route: Stirling series after an argument shift.
Real gamma_stirling(const Real& x);

// Bernoulli numbers B_0 .. B_n as exact rationals (B_1 = -1/2).
std::vector<Rat> bernoulli_numbers(int n);

struct QConstants {
    Real zeta2;        // pi^2/6
    Real zeta4;        // pi^4/90
    Real zeta_third;   // zeta(1/3)
    Real gamma_third;  // Gamma(1/3)
    Real residue = Real(1);  // residue of zeta_Q at s = 1
};

// Constants for the rational base field; every value is cross-validated by a
// second method to 25 digits and against a 100-digit re-evaluation. Throws
// std::runtime_error on disagreement.
const QConstants& q_constants();

}  // namespace cubic

#endif
