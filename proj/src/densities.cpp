#include "cubic/densities.hpp"

#include <stdexcept>

namespace cubic {

namespace {

// exponent arithmetic in u = q^{-1/3}: q^{-s} = u^{3s}
int u_exponent(const Rat& s, int multiple = 1) {
    Rat e = s * 3 * multiple;
    if (boost::multiprecision::denominator(e) != 1)
        throw std::invalid_argument("unsupported exponent: 3*s must be integral");
    Int n = boost::multiprecision::numerator(e);
    if (n <= 0) throw std::invalid_argument("unsupported exponent: s must be positive");
    return static_cast<int>(n);
}

RatFun euler_inv(int uexp) { return RatFun::one_minus_u_pow_inv(uexp); }

const Rat kOne = Rat(1);

}  // namespace

EtaleClassData etale_class(SplittingSymbol s) {
    switch (s) {
        case SplittingSymbol::S111: return {s, 6, 0};
        case SplittingSymbol::S21: return {s, 2, 0};
        case SplittingSymbol::S3: return {s, 3, 0};
        case SplittingSymbol::S121R: return {s, 2, 1};  // tame
        case SplittingSymbol::S13R: return {s, 1, 2};   // tame
    }
    throw std::invalid_argument("etale_class: bad symbol");
}

RatFun zeta_L(SplittingSymbol s, const Rat& exponent) {
    int e = u_exponent(exponent);
    switch (s) {
        case SplittingSymbol::S111:
            return euler_inv(e) * euler_inv(e) * euler_inv(e);
        case SplittingSymbol::S21:
            return euler_inv(e) * euler_inv(2 * e);
        case SplittingSymbol::S3:
            return euler_inv(3 * e);
        case SplittingSymbol::S121R:
            return euler_inv(e) * euler_inv(e);
        case SplittingSymbol::S13R:
            return euler_inv(e);
    }
    throw std::invalid_argument("zeta_L: bad symbol");
}

RatFun omega_L(SplittingSymbol s, const Rat& exponent) {
    // (1 - q^{-4s})^{-1} (1 - q^{-6s+1})^{-1} zeta_L(2s) / zeta_L(4s)
    int e4 = u_exponent(exponent, 4);
    Rat six_s_minus_1 = exponent * 6 - 1;
    int e61 = u_exponent(six_s_minus_1);
    return euler_inv(e4) * euler_inv(e61) * zeta_L(s, exponent * 2) / zeta_L(s, exponent * 4);
}

namespace {

// (1-q^{-1})(1-q^{-2}) / ((1-q^{-4})(1-q^{-5})) * zeta_L(2)/zeta_L(4)
RatFun alpha_shape(SplittingSymbol s) {
    RatFun pre = RatFun(Poly::one_minus_u_pow(3), Poly(kOne)) *
                 RatFun(Poly::one_minus_u_pow(6), Poly(kOne)) * euler_inv(12) * euler_inv(15);
    return pre * zeta_L(s, Rat(2)) / zeta_L(s, Rat(4));
}

// (1-q^{-1/3})(1-q^{-1}) / ((1-q^{-10/3})(1-q^{-4}))
//   * zeta_L(1/3) zeta_L(5/3) / (zeta_L(2/3) zeta_L(10/3))
RatFun beta_shape(SplittingSymbol s) {
    RatFun pre = RatFun(Poly::one_minus_u_pow(1), Poly(kOne)) *
                 RatFun(Poly::one_minus_u_pow(3), Poly(kOne)) * euler_inv(10) * euler_inv(12);
    return pre * zeta_L(s, Rat(1, 3)) * zeta_L(s, Rat(5, 3)) / zeta_L(s, Rat(2, 3)) /
           zeta_L(s, Rat(10, 3));
}

bool symbol_is_field(SplittingSymbol s) {
    return s == SplittingSymbol::S3 || s == SplittingSymbol::S13R;
}

RatFun theta_delta_mass(const EtaleClassData& c) {
    return RatFun(Rat(1, c.theta)) * RatFun::u_pow(3 * c.delta_exponent);
}

}  // namespace

RatFun alpha_class(const EtaleClassData& c) { return alpha_shape(c.symbol) * theta_delta_mass(c); }

RatFun beta_class(const EtaleClassData& c) { return beta_shape(c.symbol) * theta_delta_mass(c); }

RatFun gamma_class(const EtaleClassData& c) {
    if (symbol_is_field(c.symbol)) return RatFun(Rat(0));
    // prefactor 2^{-1} Delta^{-1} (no theta)
    return alpha_shape(c.symbol) * RatFun(Rat(1, 2)) * RatFun::u_pow(3 * c.delta_exponent);
}

RatFun alpha_class_via_omega(const EtaleClassData& c) {
    // (1-q^{-1})(1-q^{-2}) theta^{-1} Delta^{-1} Omega_L(1)
    RatFun pre = RatFun(Poly::one_minus_u_pow(3), Poly(kOne)) *
                 RatFun(Poly::one_minus_u_pow(6), Poly(kOne));
    return pre * theta_delta_mass(c) * omega_L(c.symbol, Rat(1));
}

RatFun beta_class_via_omega(const EtaleClassData& c) {
    // (1-q^{-1/3})(1-q^{-1}) theta^{-1} Delta^{-1}
    //   * [zeta_L(1/3)/zeta_L(2/3)] Omega_L(5/6)
    RatFun pre = RatFun(Poly::one_minus_u_pow(1), Poly(kOne)) *
                 RatFun(Poly::one_minus_u_pow(3), Poly(kOne));
    RatFun a1 = zeta_L(c.symbol, Rat(1, 3)) / zeta_L(c.symbol, Rat(2, 3));
    return pre * theta_delta_mass(c) * a1 * omega_L(c.symbol, Rat(5, 6));
}

RatFun serre_mass(int i) {
    if (i != 2 && i != 3) throw std::invalid_argument("serre_mass: i must be 2 or 3");
    return RatFun::u_pow(3 * (i - 1));
}

namespace {

RatFun symbol_mass(SplittingSymbol s) {
    switch (s) {
        case SplittingSymbol::S111: return RatFun(Rat(1, 6));
        case SplittingSymbol::S21: return RatFun(Rat(1, 2));
        case SplittingSymbol::S3: return RatFun(Rat(1, 3));
        case SplittingSymbol::S121R: return serre_mass(2);
        case SplittingSymbol::S13R: return serre_mass(3);
    }
    throw std::invalid_argument("symbol_mass: bad symbol");
}

const SplittingSymbol kAllSymbols[] = {SplittingSymbol::S111, SplittingSymbol::S21,
                                       SplittingSymbol::S3, SplittingSymbol::S121R,
                                       SplittingSymbol::S13R};

}  // namespace

RatFun alpha_symbol(SplittingSymbol s) { return alpha_shape(s) * symbol_mass(s); }

RatFun beta_symbol(SplittingSymbol s) { return beta_shape(s) * symbol_mass(s); }

RatFun gamma_symbol(SplittingSymbol s) {
    if (symbol_is_field(s)) return RatFun(Rat(0));
    // theta-free prefactor: the (111), (21) classes carry 1/2 each; the
    // ramified quadratics aggregate to the same Serre mass since theta = 2
    // throughout that family
    RatFun mass;
    switch (s) {
        case SplittingSymbol::S111:
        case SplittingSymbol::S21: mass = RatFun(Rat(1, 2)); break;
        case SplittingSymbol::S121R: mass = serre_mass(2); break;
        default: throw std::logic_error("gamma_symbol: unreachable");
    }
    return alpha_shape(s) * mass;
}

RatFun alpha_sum_with_masses(const RatFun& m2, const RatFun& m3) {
    RatFun sum = alpha_shape(SplittingSymbol::S111) * RatFun(Rat(1, 6)) +
                 alpha_shape(SplittingSymbol::S21) * RatFun(Rat(1, 2)) +
                 alpha_shape(SplittingSymbol::S3) * RatFun(Rat(1, 3));
    sum = sum + alpha_shape(SplittingSymbol::S121R) * m2 + alpha_shape(SplittingSymbol::S13R) * m3;
    return sum;
}

RatFun beta_sum_with_masses(const RatFun& m2, const RatFun& m3) {
    RatFun sum = beta_shape(SplittingSymbol::S111) * RatFun(Rat(1, 6)) +
                 beta_shape(SplittingSymbol::S21) * RatFun(Rat(1, 2)) +
                 beta_shape(SplittingSymbol::S3) * RatFun(Rat(1, 3));
    sum = sum + beta_shape(SplittingSymbol::S121R) * m2 + beta_shape(SplittingSymbol::S13R) * m3;
    return sum;
}

RatFun gamma_sum_with_mass(const RatFun& m2) {
    return gamma_symbol(SplittingSymbol::S111) + gamma_symbol(SplittingSymbol::S21) +
           alpha_shape(SplittingSymbol::S121R) * m2;
}

std::pair<RatFun, RatFun> solve_back_serre_masses() {
    // alpha: A0 + A2 m2 + A3 m3 = 1, beta: B0 + B2 m2 + B3 m3 = 1
    RatFun zero(Rat(0));
    RatFun one(Rat(1));
    RatFun a0 = alpha_sum_with_masses(zero, zero);
    RatFun a2 = alpha_sum_with_masses(one, zero) - a0;
    RatFun a3 = alpha_sum_with_masses(zero, one) - a0;
    RatFun b0 = beta_sum_with_masses(zero, zero);
    RatFun b2 = beta_sum_with_masses(one, zero) - b0;
    RatFun b3 = beta_sum_with_masses(zero, one) - b0;
    RatFun det = a2 * b3 - a3 * b2;
    if (det.is_zero()) throw std::logic_error("solve_back_serre_masses: singular system");
    RatFun r1 = one - a0, r2 = one - b0;
    RatFun m2 = (r1 * b3 - r2 * a3) / det;
    RatFun m3 = (a2 * r2 - b2 * r1) / det;
    return {m2, m3};
}

Real arch_factor(DensityKind kind, ArchPlace place) {
    Real pi = pi_const();
    Real g3 = q_constants().gamma_third;
    Real s3 = sqrt3_const();
    switch (kind) {
        case DensityKind::Alpha:
            switch (place) {
                case ArchPlace::R3: return pi / 6;
                case ArchPlace::RxC: return pi / 2;
                case ArchPlace::C3: return 2 * pi / 6;
            }
            break;
        case DensityKind::Beta:
            switch (place) {
                case ArchPlace::R3: return s3 * g3 * g3 * g3 / (4 * pi);
                case ArchPlace::RxC: return 3 * g3 * g3 * g3 / (4 * pi);
                case ArchPlace::C3: return s3 * g3 * g3 * g3 * g3 * g3 * g3 / (8 * pi * pi);
            }
            break;
        case DensityKind::Gamma: return Real(1) / 2;
    }
    throw std::invalid_argument("arch_factor: bad arguments");
}

namespace {

Real rat_to_real(const Rat& v) {
    return Real(boost::multiprecision::numerator(v).str()) /
           Real(boost::multiprecision::denominator(v).str());
}

}  // namespace

ConstantsDetail compute_constants(const BaseFieldData& k, int i_infinity,
                                  const std::vector<Condition>& conds) {
    k.validate();
    if (i_infinity < 0 || i_infinity > k.r1)
        throw std::invalid_argument("compute_constants: i_infinity out of range");
    {
        std::vector<Int> ps;
        for (const auto& c : conds) ps.push_back(c.p);
        std::sort(ps.begin(), ps.end());
        if (std::adjacent_find(ps.begin(), ps.end()) != ps.end())
            throw std::invalid_argument("compute_constants: at most one condition per prime");
    }

    ConstantsDetail out;
    Real pi = pi_const();

    auto eval_real_u = [](const RatFun& f, const Real& u) -> Real {
        Real num(0), den(0);
        for (int i = f.num().degree(); i >= 0; --i) num = num * u + rat_to_real(f.num().coeff(i));
        for (int i = f.den().degree(); i >= 0; --i) den = den * u + rat_to_real(f.den().coeff(i));
        return num / den;
    };

    // finite factors: alpha and gamma are exact rationals at t = 1/p; beta
    // genuinely involves u = p^{-1/3}
    Rat alpha_fin(1), gamma_fin(1);
    Real beta_fin_real(1);
    for (const auto& c : conds) {
        RatFun af, bf, gf;
        if (c.fine_class) {
            af = alpha_class(*c.fine_class);
            bf = beta_class(*c.fine_class);
            gf = gamma_class(*c.fine_class);
        } else {
            af = alpha_symbol(c.symbol);
            bf = beta_symbol(c.symbol);
            gf = gamma_symbol(c.symbol);
        }
        PlaceFactors pf;
        pf.p = c.p;
        pf.symbol = c.symbol;
        pf.alpha = af.eval_at_q(c.p);
        pf.gamma = gf.eval_at_q(c.p);
        Real u = pow(Real(1) / rat_to_real(Rat(c.p)), Real(1) / 3);
        pf.beta = eval_real_u(bf, u);
        out.finite_factors.push_back(pf);
        alpha_fin *= pf.alpha;
        gamma_fin *= pf.gamma;
        beta_fin_real *= pf.beta;
    }

    // composition route
    Real arch_a(1), arch_b(1), arch_g(1);
    for (int i = 0; i < k.r1; ++i) {
        ArchPlace pl = i < i_infinity ? ArchPlace::R3 : ArchPlace::RxC;
        arch_a *= arch_factor(DensityKind::Alpha, pl);
        arch_b *= arch_factor(DensityKind::Beta, pl);
        arch_g *= arch_factor(DensityKind::Gamma, pl);
    }
    for (int i = 0; i < k.r2; ++i) {
        arch_a *= arch_factor(DensityKind::Alpha, ArchPlace::C3);
        arch_b *= arch_factor(DensityKind::Beta, ArchPlace::C3);
        arch_g *= arch_factor(DensityKind::Gamma, ArchPlace::C3);
    }

    Int disc_int = boost::multiprecision::abs(k.discriminant);
    Real disc_abs = Real(disc_int.str());
    Real pref_a = Real(1) / 2 * pow(pi, -k.r1) * pow(2 * pi, -k.r2) * k.residue * k.zeta2;
    Real pref_b = Real(1) / 6 / sqrt(disc_abs) * k.residue * k.zeta_third;
    Real pref_c = Real(1) / 2 * k.residue * k.zeta2;

    out.composition.A = pref_a * arch_a * rat_to_real(alpha_fin);
    out.composition.B = pref_b * arch_b * beta_fin_real;
    out.composition.C = pref_c * arch_g * rat_to_real(gamma_fin);

    // closed-form route (the B normalization differs; reported, not hidden)
    Real g3 = q_constants().gamma_third;
    Real cf_a_den = pow(Real(2), k.r1 + k.r2 + 1) * pow(Real(3), i_infinity + k.r2);
    out.closed_form.A = k.residue * k.zeta2 / cf_a_den * rat_to_real(alpha_fin);
    Real cf_b = k.residue * k.zeta_third /
                (6 * sqrt(disc_abs) * pow(sqrt3_const(), k.r2 - i_infinity)) *
                pow(3 * g3 * g3 * g3 / (2 * pi), k.degree) * beta_fin_real;
    out.closed_form.B = cf_b;
    out.closed_form.C = out.composition.C;
    out.b_ratio = out.composition.B == 0 ? Real(0) : out.closed_form.B / out.composition.B;

    // exact pi^2 coefficients for the rational base field
    if (k.name == "Q" && k.degree == 1 && k.r1 == 1 && k.r2 == 0 && k.discriminant == 1) {
        // A = 1/2 * pi^{-1} * (pi^2/6) * arch_alpha * finite
        Rat arch_over_pi = i_infinity == 1 ? Rat(1, 6) : Rat(1, 2);
        out.a_over_pi2 = Rat(1, 2) * Rat(1, 6) * arch_over_pi * alpha_fin;
        out.c_over_pi2 = Rat(1, 2) * Rat(1, 6) * Rat(1, 2) * gamma_fin;
    }
    return out;
}

std::pair<Real, Real> steinitz_residues(const BaseFieldData& k, const GlobalConstants& g,
                                        const SteinitzInput& st) {
    k.validate();
    Real h = rat_to_real(Rat(k.class_number));
    Real h3 = rat_to_real(Rat(k.three_torsion));
    Real res1 = g.A / h;
    Real res56 = st.is_cube ? h3 / h * g.B : Real(0);
    return {res1, res56};
}

}  // namespace cubic
