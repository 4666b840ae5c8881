#include "cubic/ratfun.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cubic {

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const Rat& coeff, int degree) {
    Poly p;
    if (coeff == 0) return p;
    p.c_.assign(degree + 1, Rat(0));
    p.c_[degree] = coeff;
    return p;
}

Poly Poly::one_minus_u_pow(int k) {
    Poly p = monomial(Rat(1), 0);
    return p - monomial(Rat(1), k);
}

const Rat& Poly::coeff(int i) const {
    static const Rat zero(0);
    if (i < 0 || i > degree()) return zero;
    return c_[i];
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.assign(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.assign(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
    r.trim();
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

Rat Poly::eval(const Rat& x) const {
    Rat r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Poly Poly::derivative() const {
    Poly d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.c_.push_back(Rat(i) * c_[i]);
    d.trim();
    return d;
}

Poly Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) throw std::invalid_argument("Poly::divide_exact: zero divisor");
    Poly rem = *this, quot;
    if (rem.is_zero()) return quot;
    if (rem.degree() < d.degree())
        throw std::invalid_argument("Poly::divide_exact: not divisible");
    quot.c_.assign(rem.degree() - d.degree() + 1, Rat(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int shift = rem.degree() - d.degree();
        Rat s = rem.c_.back() / d.c_.back();
        quot.c_[shift] = s;
        for (std::size_t i = 0; i < d.c_.size(); ++i) rem.c_[shift + i] -= s * d.c_[i];
        rem.trim();
    }
    if (!rem.is_zero()) throw std::invalid_argument("Poly::divide_exact: not divisible");
    quot.trim();
    return quot;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        // a mod b
        Poly rem = a;
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            int shift = rem.degree() - b.degree();
            Rat s = rem.c_.back() / b.c_.back();
            Poly sub = Poly::monomial(s, shift) * b;
            rem = rem - sub;
        }
        a = b;
        b = rem;
    }
    if (!a.is_zero()) {
        Rat lead = a.c_.back();
        for (auto& ci : a.c_) ci /= lead;  // monic
    }
    return a;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& ci = coeff(i);
        if (ci == 0) continue;
        if (!first) os << (ci > 0 ? " + " : " - ");
        else if (ci < 0) os << "-";
        Rat a = ci > 0 ? ci : Rat(-ci);
        bool unit = (a == 1);
        if (i == 0 || !unit) os << a;
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFun: zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (den_.is_zero()) throw std::invalid_argument("RatFun: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    // monic denominator
    Rat lead = den_.coeff(den_.degree());
    if (lead != 1) {
        Poly scale = Poly::monomial(Rat(1) / lead, 0);
        num_ = num_ * scale;
        den_ = den_ * scale;
    }
}

RatFun RatFun::u_pow(int k) { return RatFun(Poly::monomial(Rat(1), k), Poly(Rat(1))); }

RatFun RatFun::one_minus_u_pow_inv(int k) {
    return RatFun(Poly(Rat(1)), Poly::one_minus_u_pow(k));
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}
RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.num_.is_zero()) throw std::invalid_argument("RatFun: division by zero");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}
bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

RatFun RatFun::inv() const {
    if (num_.is_zero()) throw std::invalid_argument("RatFun::inv: zero");
    return RatFun(den_, num_);
}

Rat RatFun::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw std::invalid_argument("RatFun::eval: pole");
    return num_.eval(x) / d;
}

bool RatFun::is_in_t() const {
    for (int i = 0; i <= num_.degree(); ++i)
        if (i % 3 != 0 && num_.coeff(i) != 0) return false;
    for (int i = 0; i <= den_.degree(); ++i)
        if (i % 3 != 0 && den_.coeff(i) != 0) return false;
    return true;
}

Rat RatFun::eval_at_q(const Int& q) const {
    if (!is_in_t()) throw std::invalid_argument("RatFun::eval_at_q: odd u-exponents present");
    Rat t = Rat(1, q);
    auto eval_t = [&](const Poly& p) {
        Rat acc(0), tp(1);
        for (int i = 0; i <= p.degree(); i += 3) {
            acc += p.coeff(i) * tp;
            tp *= t;
        }
        return acc;
    };
    Rat d = eval_t(den_);
    if (d == 0) throw std::invalid_argument("RatFun::eval_at_q: pole");
    return eval_t(num_) / d;
}

std::string RatFun::str(const std::string& var) const {
    if (den_ == Poly(Rat(1))) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << f.str(); }

}  // namespace cubic
