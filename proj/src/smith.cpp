#include "lpa/error.hpp"
#include "lpa/exact_linalg.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace lpa {

namespace {

// Position of the nonzero entry of least magnitude in the trailing block
// starting at (t, t).
std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& a, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    for (std::size_t i = t; i < a.rows(); ++i) {
        for (std::size_t j = t; j < a.cols(); ++j) {
            const BigInt& x = a(i, j);
            if (x == 0) continue;
            BigInt ax = abs_value(x);
            if (!best || ax < best_abs) {
                best = {i, j};
                best_abs = std::move(ax);
                if (best_abs == 1) return best;
            }
        }
    }
    return best;
}

void verify(const IntMatrix& m, const SmithDecomposition& s) {
    const IntMatrix diag = IntMatrix::diagonal(s.d, m.rows(), m.cols());
    if (s.u * m * s.v != diag) throw InternalError("smith_normal_form: u*m*v != diag(d)");
    if (abs_value(determinant(s.u)) != 1) throw InternalError("smith_normal_form: u not unimodular");
    if (abs_value(determinant(s.v)) != 1) throw InternalError("smith_normal_form: v not unimodular");
    bool seen_zero = false;
    for (std::size_t i = 0; i < s.d.size(); ++i) {
        if (s.d[i] < 0) throw InternalError("smith_normal_form: negative invariant factor");
        if (s.d[i] == 0) {
            seen_zero = true;
            continue;
        }
        if (seen_zero) throw InternalError("smith_normal_form: zero before a nonzero factor");
        if (i + 1 < s.d.size() && s.d[i + 1] != 0 && s.d[i + 1] % s.d[i] != 0)
            throw InternalError("smith_normal_form: divisibility chain broken");
    }
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);
    const std::size_t diag_len = std::min(rows, cols);

    std::size_t t = 0;
    for (; t < diag_len; ++t) {
        for (;;) {
            auto pos = smallest_entry(a, t);
            if (!pos) goto done;  // trailing block is zero
            a.swap_rows(t, pos->first);
            u.swap_rows(t, pos->first);
            a.swap_cols(t, pos->second);
            v.swap_cols(t, pos->second);

            const BigInt pivot = a(t, t);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                const BigInt q = a(i, t) / pivot;
                a.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                const BigInt q = a(t, j) / pivot;
                a.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Row and column are clear; the pivot must divide the rest.
            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < rows && !bad_row; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(i, j) % pivot != 0) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row) break;
            a.add_row_multiple(t, *bad_row, 1);
            u.add_row_multiple(t, *bad_row, 1);
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
done:
    SmithDecomposition s;
    s.d.resize(diag_len);
    for (std::size_t i = 0; i < diag_len; ++i) s.d[i] = a(i, i);
    s.u = std::move(u);
    s.v = std::move(v);
    verify(m, s);
    return s;
}

}  // namespace lpa
