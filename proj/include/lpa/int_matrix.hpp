#ifndef LPA_INT_MATRIX_HPP
#define LPA_INT_MATRIX_HPP

#include "lpa/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace lpa {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(std::span<const BigInt> d, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<BigInt> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
    std::span<const BigInt> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

    IntMatrix transpose() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);
    // col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);
    void negate_row(std::size_t r);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> entries_;
};

/// Throws ShapeError on mismatched inner dimensions.
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

/// Matrix-vector product; throws ShapeError on length mismatch.
std::vector<BigInt> apply(const IntMatrix& m, std::span<const BigInt> v);

}  // namespace lpa

#endif  // LPA_INT_MATRIX_HPP
