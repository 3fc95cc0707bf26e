#include "lpa/int_matrix.hpp"

#include "lpa/error.hpp"

#include <string>
#include <utility>

namespace lpa {

BigInt exact_div(const BigInt& a, const BigInt& b, const char* what) {
    if (b == 0 || a % b != 0) {
        throw InternalError(std::string("inexact division: ") + what + " (" + a.str() + " / " +
                            b.str() + ")");
    }
    return a / b;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ShapeError("ragged matrix literal");
        for (long long x : r) entries_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(std::span<const BigInt> d, std::size_t rows, std::size_t cols) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < d.size() && i < rows && i < cols; ++i) m(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) {
        const BigInt& s = (*this)(src, c);
        if (s != 0) (*this)(dst, c) += k * s;
    }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) {
        const BigInt& s = (*this)(r, src);
        if (s != 0) (*this)(r, dst) += k * s;
    }
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("matrix product of " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
    }
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const BigInt& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const BigInt& y = b(k, j);
                if (y != 0) out(i, j) += x * y;
            }
        }
    }
    return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix difference shape");
    IntMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

std::vector<BigInt> apply(const IntMatrix& m, std::span<const BigInt> v) {
    if (v.size() != m.cols()) {
        throw ShapeError("vector of length " + std::to_string(v.size()) + " against " +
                         std::to_string(m.cols()) + " columns");
    }
    std::vector<BigInt> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (v[j] != 0 && m(i, j) != 0) out[i] += m(i, j) * v[j];
    return out;
}

}  // namespace lpa
