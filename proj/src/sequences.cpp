#include "lpa/sequences.hpp"

#include "lpa/error.hpp"
#include "lpa/exact_linalg.hpp"
#include "lpa/graph.hpp"

#include <numeric>
#include <string>

namespace lpa {

std::vector<BigInt> fibonacci_table(std::size_t max_index) {
    std::vector<BigInt> f(max_index + 1);
    if (max_index >= 1) f[1] = 1;
    for (std::size_t i = 2; i <= max_index; ++i) f[i] = f[i - 1] + f[i - 2];
    return f;
}

BigInt fib(std::size_t n) { return fibonacci_table(n)[n]; }

BigInt haselgrove(std::size_t k, std::size_t n) {
    if (n == 0) throw InvalidParameter("haselgrove requires n >= 1");
    return abs_value(determinant(k0_relation_matrix(cayley_graph(n, k % n))));
}

std::vector<BigInt> h2_table(std::size_t max_n) {
    std::vector<BigInt> h(max_n + 1);
    for (std::size_t i = 1; i <= max_n; ++i) {
        if (i <= 2) {
            h[i] = 1;
        } else {
            // 1 - (-1)^i is 0 for even i and 2 for odd i
            h[i] = h[i - 1] + h[i - 2] + (i % 2 == 0 ? 0 : 2);
        }
    }
    return h;
}

BigInt h2_recursive(std::size_t n) {
    if (n == 0) throw InvalidParameter("h2_recursive requires n >= 1");
    return h2_table(n)[n];
}

BigInt d_gcd(std::size_t n) {
    if (n == 0) throw InvalidParameter("d(n) requires n >= 1");
    const auto f = fibonacci_table(n);
    return gcd(f[n], f[n - 1] - 1);
}

BigInt d_closed(std::size_t n) {
    if (n == 0) throw InvalidParameter("d(n) requires n >= 1");
    if (n % 2 == 1) return n % 6 == 3 ? 2 : 1;
    const std::size_t m = (n - 2) / 2;
    const auto f = fibonacci_table(m + 2);
    return m % 2 == 0 ? BigInt(f[m] + f[m + 2]) : f[m + 1];
}

GcdInvariants gcd_invariants(std::size_t n) {
    if (n == 0) throw InvalidParameter("gcd_invariants requires n >= 1");
    const auto f = fibonacci_table(n);
    const BigInt h2 = h2_recursive(n);
    const BigInt d = gcd(f[n], f[n - 1] - 1);
    GcdInvariants out;
    out.a = gcd(exact_div(f[n], d, "F(n)/d(n)"), h2);
    if (n % 2 == 0) {
        out.b = gcd(exact_div(f[n - 1] - 1, d, "(F(n-1)-1)/d(n)"), exact_div(h2, d, "H2(n)/d(n)"));
    }
    return out;
}

IdentityReport identity_suite(std::size_t n) {
    if (n < 2) throw InvalidParameter("identity_suite requires n >= 2");
    const auto f = fibonacci_table(2 * n + 2);
    const BigInt h2 = h2_recursive(n);
    const int s = sign_pow(n);

    IdentityReport r;
    r.index = n;
    r.cassini = f[n + 1] * f[n - 1] - f[n] * f[n] == s;
    r.f_odd = f[2 * n - 1] == f[n] * f[n] + f[n - 1] * f[n - 1];
    r.f_even = f[2 * n] == (f[n - 1] + f[n + 1]) * f[n];
    r.f_gcd = true;
    for (std::size_t m = 1; m <= n; ++m) {
        const std::size_t g = std::gcd(n, m);
        if (gcd(f[n], f[m]) != f[g]) {
            r.f_gcd = false;
            break;
        }
    }
    r.even_f_values = (f[n] % 2 == 0) == (n % 3 == 0);
    r.hoggatt71 = f[n + 2] * f[n + 2] == 3 * f[n + 1] * f[n + 1] - f[n] * f[n] - 2 * s;
    r.vajda12 = f[n + 1] * f[n + 1] - f[n] * f[n] == f[n + 2] * f[n - 1];
    r.vajda20 = f[n] * f[n + 1] == f[n - 1] * f[n + 2] + sign_pow(n - 1);
    r.h_to_f = h2 == f[n + 1] + f[n - 1] - 1 - s;
    return r;
}

BigInt gcd_reduction(std::size_t n, std::size_t j) {
    if (j + 2 > n) {
        throw InvalidParameter("gcd_reduction requires j + 2 <= n (n=" + std::to_string(n) +
                               ", j=" + std::to_string(j) + ")");
    }
    const auto f = fibonacci_table(n);
    const BigInt first = f[n - (j + 1)] + sign_pow(j + 1) * f[j + 1];
    const BigInt second = f[n - (j + 2)] + sign_pow(j) * f[j + 2];
    return gcd(first, second);
}

}  // namespace lpa
