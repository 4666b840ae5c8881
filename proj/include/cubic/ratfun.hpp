#ifndef CUBIC_RATFUN_HPP
#define CUBIC_RATFUN_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "cubic/numeric.hpp"

namespace cubic {

// Dense polynomial over Q in one variable. The density layer works in
// u = q^{-1/3}, so that t = q^{-1} = u^3 and third-integral exponents stay
// polynomial.
class Poly {
  public:
    Poly() = default;
    explicit Poly(Rat c0) : c_{std::move(c0)} { trim(); }
    static Poly monomial(const Rat& coeff, int degree);
    static Poly one_minus_u_pow(int k);  // 1 - u^k

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& coeff(int i) const;

    friend Poly operator+(const Poly&, const Poly&);
    friend Poly operator-(const Poly&, const Poly&);
    friend Poly operator*(const Poly&, const Poly&);
    friend bool operator==(const Poly&, const Poly&) = default;

    Rat eval(const Rat& x) const;
    Poly derivative() const;

    // divides exactly or throws
    Poly divide_exact(const Poly& d) const;

    static Poly gcd(Poly a, Poly b);

    std::string str(const std::string& var = "u") const;

  private:
    void trim();
    std::vector<Rat> c_;
};

// Quotient of polynomials in u, kept reduced with monic denominator.
class RatFun {
  public:
    RatFun() : num_(Rat(0)), den_(Rat(1)) {}
    RatFun(Rat value) : num_(std::move(value)), den_(Rat(1)) { normalize(); }  // NOLINT
    RatFun(Poly num, Poly den);

    static RatFun u_pow(int k);                  // u^k (k >= 0)
    static RatFun one_minus_u_pow_inv(int k);    // (1 - u^k)^{-1}
    static RatFun from_int(long v) { return RatFun(Rat(v)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFun operator+(const RatFun&, const RatFun&);
    friend RatFun operator-(const RatFun&, const RatFun&);
    friend RatFun operator*(const RatFun&, const RatFun&);
    friend RatFun operator/(const RatFun&, const RatFun&);
    friend bool operator==(const RatFun&, const RatFun&);

    RatFun inv() const;

    // evaluation at u = x (throws on a denominator zero)
    Rat eval(const Rat& x) const;
    // evaluation at t = q^{-1}, i.e. u = q^{-1/3}; requires u-exponents
    // divisible by 3 (is_poly_in_t)
    bool is_in_t() const;
    Rat eval_at_q(const Int& q) const;

    std::string str(const std::string& var = "u") const;

  private:
    void normalize();
    Poly num_, den_;
};

std::ostream& operator<<(std::ostream&, const RatFun&);

}  // namespace cubic

#endif
