#include "lpa/error.hpp"
#include "lpa/exact_linalg.hpp"

#include <string>

namespace lpa {

// Bareiss elimination: after step k every remaining entry is a (k+1)-minor,
// so the division by the previous pivot is exact. Rows whose multiplier is
// zero only need rescaling, which keeps sparse relation matrices cheap.
BigInt determinant(const IntMatrix& m) {
    if (!m.square()) {
        throw ShapeError("determinant of a " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    IntMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            a.swap_rows(p, k);
            sign = -sign;
        }
        const BigInt pivot = a(k, k);
        const bool rescale = pivot != prev;
        for (std::size_t i = k + 1; i < n; ++i) {
            const BigInt lead = a(i, k);
            if (lead == 0) {
                if (!rescale) continue;
                for (std::size_t j = k + 1; j < n; ++j) {
                    BigInt& x = a(i, j);
                    if (x != 0) x = x * pivot / prev;
                }
                continue;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt& x = a(i, j);
                const BigInt& y = a(k, j);
                if (y == 0) {
                    if (rescale && x != 0) x = x * pivot / prev;
                } else {
                    x = (x * pivot - lead * y) / prev;
                }
            }
            a(i, k) = 0;
        }
        prev = pivot;
    }
    return sign > 0 ? a(n - 1, n - 1) : BigInt(-a(n - 1, n - 1));
}

}  // namespace lpa
