#include "lpa/error.hpp"
#include "lpa/exact_linalg.hpp"

#include <atomic>
#include <string>
#include <utility>

namespace lpa {

namespace {

std::uint64_t next_tag() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

std::optional<BigInt> AbelianGroup::order() const {
    if (free_rank != 0) return std::nullopt;
    BigInt o = 1;
    for (const auto& t : torsion) o *= t;
    return o;
}

AbelianGroup AbelianGroup::from_cyclic_factors(std::span<const BigInt> factors) {
    IntMatrix diag(factors.size(), factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) diag(i, i) = factors[i];
    return cokernel(diag).group();
}

Cokernel cokernel(const IntMatrix& m) {
    const SmithDecomposition s = smith_normal_form(m);
    const std::size_t n = m.rows();

    // Z^n / Im(M) = Z^n / Im(U M V) after the change of basis x -> U x, so
    // class coordinates are the rows of U whose factor is not 1.
    std::vector<std::size_t> torsion_rows;
    std::vector<std::size_t> free_rows;
    Cokernel c;
    for (std::size_t i = 0; i < n; ++i) {
        const BigInt f = i < s.d.size() ? s.d[i] : BigInt(0);
        if (f == 0) {
            free_rows.push_back(i);
        } else if (f != 1) {
            torsion_rows.push_back(i);
            c.group_.torsion.push_back(f);
        }
    }
    c.group_.free_rank = free_rows.size();

    c.projection_ = IntMatrix(torsion_rows.size() + free_rows.size(), n);
    std::size_t out = 0;
    for (std::size_t r : torsion_rows) {
        for (std::size_t k = 0; k < n; ++k) c.projection_(out, k) = s.u(r, k);
        ++out;
    }
    for (std::size_t r : free_rows) {
        for (std::size_t k = 0; k < n; ++k) c.projection_(out, k) = s.u(r, k);
        ++out;
    }
    c.tag_ = next_tag();
    return c;
}

GroupElement Cokernel::reduce(std::vector<BigInt> coords) const {
    for (std::size_t i = 0; i < group_.torsion.size(); ++i) coords[i] = mod_floor(coords[i], group_.torsion[i]);
    return GroupElement{std::move(coords), tag_};
}

void Cokernel::check(const GroupElement& a) const {
    if (a.group_tag != tag_) throw InvalidParameter("group element belongs to a different cokernel");
    if (a.coords.size() != projection_.rows()) throw ShapeError("group element has wrong coordinate count");
}

GroupElement Cokernel::project(std::span<const BigInt> v) const {
    return reduce(apply(projection_, v));
}

GroupElement Cokernel::basis_class(std::size_t i) const {
    if (i >= dimension()) throw ShapeError("basis index " + std::to_string(i) + " out of range");
    std::vector<BigInt> e(dimension());
    e[i] = 1;
    return project(e);
}

GroupElement Cokernel::identity() const {
    return GroupElement{std::vector<BigInt>(projection_.rows()), tag_};
}

GroupElement Cokernel::add(const GroupElement& a, const GroupElement& b) const {
    check(a);
    check(b);
    std::vector<BigInt> c(a.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
    return reduce(std::move(c));
}

GroupElement Cokernel::scale(const BigInt& k, const GroupElement& a) const {
    check(a);
    std::vector<BigInt> c(a.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * a.coords[i];
    return reduce(std::move(c));
}

bool Cokernel::is_identity(const GroupElement& a) const {
    check(a);
    for (const auto& x : a.coords)
        if (x != 0) return false;
    return true;
}

GroupElement project(std::span<const BigInt> v, const Cokernel& coker) { return coker.project(v); }

std::optional<BigInt> element_order(const GroupElement& e, const AbelianGroup& g) {
    const std::size_t k = g.torsion.size();
    if (e.coords.size() != k + g.free_rank) throw ShapeError("element does not belong to group");
    for (std::size_t i = k; i < e.coords.size(); ++i)
        if (e.coords[i] != 0) return std::nullopt;
    BigInt order = 1;
    for (std::size_t i = 0; i < k; ++i) {
        const BigInt& t = g.torsion[i];
        order = lcm(order, t / gcd(mod_floor(e.coords[i], t), t));
    }
    return order;
}

bool generates(std::span<const GroupElement> elems, const AbelianGroup& g) {
    if (!g.finite()) throw Unsupported("generates: group has free rank " + std::to_string(g.free_rank));
    const std::size_t k = g.torsion.size();
    if (k == 0) return true;
    // Columns: the element coordinates, then the relations t_i e_i. The
    // subgroup is everything iff this lattice is all of Z^k.
    IntMatrix lattice(k, elems.size() + k);
    for (std::size_t c = 0; c < elems.size(); ++c) {
        if (elems[c].coords.size() != k) throw ShapeError("element does not belong to group");
        for (std::size_t r = 0; r < k; ++r) lattice(r, c) = elems[c].coords[r];
    }
    for (std::size_t r = 0; r < k; ++r) lattice(r, elems.size() + r) = g.torsion[r];
    const auto s = smith_normal_form(lattice);
    for (const auto& d : s.d)
        if (d != 1) return false;
    return true;
}

}  // namespace lpa
