#include "lpa/exact_linalg.hpp"

#include <numbers>

namespace lpa {

std::complex<double> circulant_det_float(std::span<const BigInt> first_row) {
    const std::size_t n = first_row.size();
    std::vector<double> b(n);
    for (std::size_t k = 0; k < n; ++k) b[k] = first_row[k].convert_to<double>();

    std::complex<double> product = 1.0;
    for (std::size_t l = 0; l < n; ++l) {
        std::complex<double> factor = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            // w_l^k computed from the reduced exponent to keep the angle small
            const double angle = 2.0 * std::numbers::pi * static_cast<double>((l * k) % n) / static_cast<double>(n);
            factor += b[k] * std::polar(1.0, angle);
        }
        product *= factor;
    }
    return product;
}

}  // namespace lpa
