#ifndef CUBIC_NUMERIC_HPP
#define CUBIC_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace cubic {

// All form arithmetic is exact. Int is the default coefficient type;
// hot loops may use int64_t after a static range check (see census.cpp).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt_floor: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

// floor(sqrt(n)) for n >= 0, exact.
inline std::int64_t isqrt64(std::int64_t n) {
    if (n < 0) throw std::domain_error("isqrt64: negative argument");
    if (n == 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<__int128>(r) * r > n) --r;
    while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Division rounding toward -inf / +inf for int64 (quotients of small loop bounds).
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return -floor_div(-a, b);
}

inline std::int64_t to_i64_checked(const Int& v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error(std::string("int64 overflow in ") + what);
    return static_cast<std::int64_t>(v);
}

// gcd on Int is provided by boost; this wrapper keeps call sites short.
inline Int igcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

}  // namespace cubic

#endif
