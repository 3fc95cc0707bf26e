#ifndef LPA_BIGINT_HPP
#define LPA_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace lpa {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt abs_value(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

// gcd on absolute values; gcd(0, a) = |a|.
inline BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(abs_value(a), abs_value(b));
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return abs_value(a) / gcd(a, b) * abs_value(b);
}

// Remainder in [0, |m|). m must be nonzero.
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += abs_value(m);
    return r;
}

// a / b, throwing InternalError when b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b, const char* what);

inline std::string to_string(const BigInt& a) { return a.str(); }

// (-1)^k by parity.
inline int sign_pow(unsigned long long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace lpa

#endif  // LPA_BIGINT_HPP
