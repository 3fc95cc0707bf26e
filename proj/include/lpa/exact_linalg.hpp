#ifndef LPA_EXACT_LINALG_HPP
#define LPA_EXACT_LINALG_HPP

#include "lpa/bigint.hpp"
#include "lpa/int_matrix.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lpa {

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws ShapeError for non-square input.
BigInt determinant(const IntMatrix& m);

/// u * m * v == diag(d), with u and v unimodular. d is non-negative, each
/// nonzero entry divides the next, and zeros come last.
struct SmithDecomposition {
    std::vector<BigInt> d;
    IntMatrix u;
    IntMatrix v;
};

/// Smallest-magnitude pivoting. The result is checked against the
/// SmithDecomposition invariants before it is returned; a failed check throws
/// InternalError.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Finitely generated abelian group Z^free_rank x Z_t1 x ... x Z_tk with
/// 1 < t1 | t2 | ... | tk. Two groups are isomorphic iff they compare equal.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;

    bool finite() const { return free_rank == 0; }
    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool cyclic() const { return free_rank + torsion.size() <= 1; }
    /// nullopt when the group is infinite.
    std::optional<BigInt> order() const;

    /// Canonical form of a product of cyclic groups Z_{c_i} (c_i = 0 means Z).
    static AbelianGroup from_cyclic_factors(std::span<const BigInt> factors);

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Coordinates of a cokernel class: one per torsion factor (reduced into
/// [0, t)), followed by one per free rank. The tag identifies the cokernel the
/// element came from.
struct GroupElement {
    std::vector<BigInt> coords;
    std::uint64_t group_tag = 0;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Z^n / Im(M) together with the map sending integer vectors to class
/// coordinates.
class Cokernel {
public:
    const AbelianGroup& group() const { return group_; }
    /// Rows: torsion coordinates then free coordinates; columns: n.
    const IntMatrix& projection() const { return projection_; }
    std::size_t dimension() const { return projection_.cols(); }
    std::uint64_t tag() const { return tag_; }

    /// Throws ShapeError when v.size() != dimension().
    GroupElement project(std::span<const BigInt> v) const;
    GroupElement basis_class(std::size_t i) const;
    GroupElement identity() const;

    /// Arithmetic throws InvalidParameter when an operand belongs to another
    /// cokernel.
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement scale(const BigInt& k, const GroupElement& a) const;
    bool is_identity(const GroupElement& a) const;

private:
    friend Cokernel cokernel(const IntMatrix& m);

    GroupElement reduce(std::vector<BigInt> coords) const;
    void check(const GroupElement& a) const;

    AbelianGroup group_;
    IntMatrix projection_;
    std::uint64_t tag_ = 0;
};

/// Cokernel of M acting on column vectors. M is normally square.
Cokernel cokernel(const IntMatrix& m);

GroupElement project(std::span<const BigInt> v, const Cokernel& coker);

/// Least k >= 1 with k*e = 0, as lcm of t/gcd(c, t) over torsion
/// coordinates; nullopt (infinite) when a free coordinate is nonzero.
std::optional<BigInt> element_order(const GroupElement& e, const AbelianGroup& g);

/// Whether elems generate all of g. Throws Unsupported for infinite g.
bool generates(std::span<const GroupElement> elems, const AbelianGroup& g);

/// prod over the n-th roots of unity w of (b1 + b2 w + ... + bn w^{n-1}).
/// Floating-point cross-check of the determinant of a circulant matrix.
std::complex<double> circulant_det_float(std::span<const BigInt> first_row);

}  // namespace lpa

#endif  // LPA_EXACT_LINALG_HPP
