#ifndef LPA_SEQUENCES_HPP
#define LPA_SEQUENCES_HPP

#include "lpa/bigint.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lpa {

/// F(0..max_index), with F(0) = 0, F(1) = F(2) = 1.
std::vector<BigInt> fibonacci_table(std::size_t max_index);

BigInt fib(std::size_t n);

/// H_k(n) = |det(I - A^t)| for the Cayley graph C_n^{k mod n}. Requires n >= 1.
BigInt haselgrove(std::size_t k, std::size_t n);

/// H_2 from H(1) = H(2) = 1, H(n) = H(n-1) + H(n-2) + 1 - (-1)^n.
BigInt h2_recursive(std::size_t n);

/// H_2(1..max_n) by the recursion; index 0 is unused and set to 0.
std::vector<BigInt> h2_table(std::size_t max_n);

/// d(n) = gcd(F(n), F(n-1) - 1).
BigInt d_gcd(std::size_t n);

/// Closed form of d(n): odd n gives 1, or 2 when n = 3 mod 6; n = 2m + 2
/// gives F(m) + F(m+2) for even m and F(m+1) for odd m.
BigInt d_closed(std::size_t n);

struct GcdInvariants {
    BigInt a;                  // gcd(F(n)/d, H_2(n))
    std::optional<BigInt> b;   // gcd((F(n-1)-1)/d, H_2(n)/d), even n only
};

GcdInvariants gcd_invariants(std::size_t n);

struct IdentityReport {
    std::size_t index = 0;
    bool cassini = false;
    bool f_odd = false;
    bool f_even = false;
    bool f_gcd = false;
    bool even_f_values = false;
    bool hoggatt71 = false;
    bool vajda12 = false;
    bool vajda20 = false;
    bool h_to_f = false;

    bool all() const {
        return cassini && f_odd && f_even && f_gcd && even_f_values && hoggatt71 && vajda12 &&
               vajda20 && h_to_f;
    }
};

/// Checks the nine Fibonacci/Haselgrove identities at index n (n >= 2).
/// F-gcd is checked against every m in [1, n]. Throws InvalidParameter for n < 2.
IdentityReport identity_suite(std::size_t n);

/// gcd(F(n-(j+1)) + (-1)^{j+1} F(j+1), F(n-(j+2)) + (-1)^j F(j+2)); equals
/// d(n) whenever j + 2 <= n. Throws InvalidParameter otherwise.
BigInt gcd_reduction(std::size_t n, std::size_t j);

}  // namespace lpa

#endif  // LPA_SEQUENCES_HPP
