#include "lpa/error.hpp"
#include "lpa/exact_linalg.hpp"
#include "lpa/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace lpa;

namespace {

// Leibniz expansion: independent of elimination.
BigInt leibniz_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    BigInt total = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        BigInt term = inversions % 2 == 0 ? 1 : -1;
        for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
    do {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask[i]) idx.push_back(i);
        fn(idx);
    } while (std::prev_permutation(mask.begin(), mask.end()));
}

// Invariant factors as quotients of determinantal divisors D_k = gcd of all
// k x k minors.
std::vector<BigInt> invariant_factors_by_minors(const IntMatrix& m) {
    const std::size_t r = std::min(m.rows(), m.cols());
    std::vector<BigInt> out;
    BigInt prev = 1;
    for (std::size_t k = 1; k <= r; ++k) {
        BigInt dk = 0;
        for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
            for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
                IntMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
                dk = gcd(dk, leibniz_det(sub));
            });
        });
        if (dk == 0) {
            out.resize(r, 0);
            return out;
        }
        out.push_back(dk / prev);
        prev = dk;
    }
    return out;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int spread) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<int>(rng() % (2 * spread + 1)) - spread;
    return m;
}

IntMatrix relation(std::size_t n, std::size_t j) { return k0_relation_matrix(cayley_graph(n, j)); }

// Order by repeated addition; only usable for small orders.
BigInt iterated_order(const Cokernel& c, const GroupElement& e) {
    GroupElement acc = e;
    BigInt k = 1;
    while (!c.is_identity(acc)) {
        acc = c.add(acc, e);
        ++k;
    }
    return k;
}

// Size of the subgroup generated by elems, by closure.
std::size_t subgroup_size(const Cokernel& c, const std::vector<GroupElement>& elems) {
    std::set<std::vector<BigInt>> seen{c.identity().coords};
    std::vector<GroupElement> frontier{c.identity()};
    while (!frontier.empty()) {
        GroupElement x = frontier.back();
        frontier.pop_back();
        for (const auto& g : elems) {
            GroupElement y = c.add(x, g);
            if (seen.insert(y.coords).second) frontier.push_back(y);
        }
    }
    return seen.size();
}

}  // namespace

TEST(Determinant, Examples) {
    EXPECT_EQ(determinant(relation(4, 2)), -5);
    EXPECT_EQ(determinant(relation(6, 5)), 0);
    EXPECT_EQ(determinant(IntMatrix::identity(3)), 1);
    EXPECT_EQ(determinant(IntMatrix(0, 0)), 1);
    EXPECT_THROW(determinant(IntMatrix(2, 3)), ShapeError);
}

TEST(Determinant, NeedsRowSwap) {
    EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
    EXPECT_EQ(determinant(IntMatrix{{0, 0, 2}, {0, 3, 0}, {5, 0, 0}}), -30);
}

TEST(Determinant, MatchesLeibnizOnRandomMatrices) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        const IntMatrix m = random_matrix(rng, n, n, trial % 3 == 0 ? 1 : 9);
        ASSERT_EQ(determinant(m), leibniz_det(m)) << "trial " << trial;
    }
}

TEST(Determinant, CayleyDeterminantsAreNonPositive) {
    for (std::size_t n = 1; n <= 25; ++n)
        for (std::size_t j = 0; j < n; ++j) ASSERT_LE(determinant(relation(n, j)), 0) << n << "," << j;
}

TEST(SmithNormalForm, EnGraphAtSix) {
    const auto s = smith_normal_form(IntMatrix{{1, 1, 1}, {1, 5, 1}, {1, 1, 5}});
    EXPECT_EQ(s.d, (std::vector<BigInt>{1, 4, 4}));
}

TEST(SmithNormalForm, C42) {
    const IntMatrix m = relation(4, 2);
    const auto s = smith_normal_form(m);
    EXPECT_EQ(s.d, (std::vector<BigInt>{1, 1, 1, 5}));
    EXPECT_EQ(s.d, invariant_factors_by_minors(m));
}

TEST(SmithNormalForm, ZeroMatrix) {
    const auto s = smith_normal_form(IntMatrix(2, 2));
    EXPECT_EQ(s.d, (std::vector<BigInt>{0, 0}));
}

TEST(SmithNormalForm, SelfConsistencyAndMinorsOracle) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 4;
        const std::size_t cols = 1 + rng() % 4;
        const IntMatrix m = random_matrix(rng, rows, cols, trial % 4 == 0 ? 2 : 12);
        const auto s = smith_normal_form(m);
        ASSERT_EQ(s.u * m * s.v, IntMatrix::diagonal(s.d, rows, cols));
        ASSERT_EQ(abs_value(determinant(s.u)), 1);
        ASSERT_EQ(abs_value(determinant(s.v)), 1);
        ASSERT_EQ(s.d, invariant_factors_by_minors(m)) << "trial " << trial;
    }
}

TEST(SmithNormalForm, AbsDetIsProductOfFactors) {
    std::mt19937 rng(3);
    auto check = [](const IntMatrix& m) {
        const BigInt det = determinant(m);
        if (det == 0) return;
        const auto s = smith_normal_form(m);
        BigInt prod = 1;
        for (const auto& x : s.d) prod *= x;
        ASSERT_EQ(prod, abs_value(det));
    };
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        check(random_matrix(rng, n, n, 6));
    }
    for (std::size_t n = 1; n <= 25; ++n)
        for (std::size_t j = 0; j < n; ++j) check(relation(n, j));
}

TEST(Cokernel, Examples) {
    for (std::size_t n = 1; n <= 20; ++n) EXPECT_TRUE(cokernel(relation(n, 0)).group().trivial()) << n;

    const AbelianGroup z15 = cokernel(relation(4, 1)).group();
    EXPECT_EQ(z15.free_rank, 0u);
    EXPECT_EQ(z15.torsion, (std::vector<BigInt>{15}));

    EXPECT_GE(cokernel(relation(6, 5)).group().free_rank, 1u);
    EXPECT_FALSE(cokernel(relation(6, 5)).group().order().has_value());

    const AbelianGroup c32 = cokernel(relation(3, 2)).group();
    EXPECT_EQ(c32.torsion, (std::vector<BigInt>{2, 2}));
}

TEST(Cokernel, ProjectC42) {
    const Cokernel c = cokernel(relation(4, 2));
    const GroupElement v1 = c.basis_class(0);
    EXPECT_EQ(element_order(v1, c.group()), BigInt(5));
    const GroupElement v1s[1] = {v1};
    EXPECT_TRUE(generates(v1s, c.group()));
    EXPECT_TRUE(c.is_identity(c.project(std::vector<BigInt>{1, 1, 1, 1})));
    EXPECT_TRUE(c.is_identity(c.project(std::vector<BigInt>{0, 0, 0, 0})));
    EXPECT_THROW(c.project(std::vector<BigInt>{1, 1}), ShapeError);

    // the monoid relations: [v1] = [v2] + [v3], [v2] = 2[v1], [v4] = 3[v1]
    EXPECT_EQ(c.basis_class(0), c.add(c.basis_class(1), c.basis_class(2)));
    EXPECT_EQ(c.basis_class(1), c.scale(2, v1));
    EXPECT_EQ(c.basis_class(3), c.scale(3, v1));
}

TEST(Cokernel, ElementsFromDifferentCokernelsDoNotMix) {
    const Cokernel a = cokernel(relation(4, 2));
    const Cokernel b = cokernel(relation(4, 2));
    EXPECT_THROW(a.add(a.basis_class(0), b.basis_class(0)), InvalidParameter);
}

TEST(Cokernel, ProjectIsAHomomorphism) {
    std::mt19937 rng(5);
    for (std::size_t n = 3; n <= 9; ++n) {
        const Cokernel c = cokernel(relation(n, 2));
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<BigInt> u(n), v(n), w(n);
            for (std::size_t i = 0; i < n; ++i) {
                u[i] = static_cast<int>(rng() % 41) - 20;
                v[i] = static_cast<int>(rng() % 41) - 20;
                w[i] = u[i] + v[i];
            }
            ASSERT_EQ(c.project(w), c.add(c.project(u), c.project(v)));
        }
    }
}

TEST(Cokernel, ImageOfRelationMatrixIsZero) {
    for (std::size_t n = 1; n <= 12; ++n) {
        for (std::size_t j = 0; j < n; ++j) {
            const IntMatrix m = relation(n, j);
            const Cokernel c = cokernel(m);
            const IntMatrix mt = m.transpose();
            for (std::size_t col = 0; col < n; ++col) ASSERT_TRUE(c.is_identity(c.project(mt.row(col))));
        }
    }
}

TEST(ElementOrder, ClosedFormMatchesIteration) {
    for (std::size_t n = 2; n <= 10; ++n) {
        for (std::size_t j = 0; j < n; ++j) {
            const Cokernel c = cokernel(relation(n, j));
            if (!c.group().finite()) continue;
            for (std::size_t i = 0; i < n; ++i) {
                const GroupElement e = c.basis_class(i);
                const auto order = element_order(e, c.group());
                ASSERT_TRUE(order);
                ASSERT_EQ(*order, iterated_order(c, e));
                ASSERT_TRUE(c.is_identity(c.scale(*order, e)));
            }
        }
    }
}

TEST(ElementOrder, Examples) {
    const Cokernel c6 = cokernel(relation(6, 2));
    const auto order = element_order(c6.basis_class(0), c6.group());
    ASSERT_TRUE(order);
    EXPECT_EQ(BigInt(4) % *order, 0);

    const Cokernel z5 = cokernel(relation(4, 2));
    EXPECT_EQ(element_order(z5.identity(), z5.group()), BigInt(1));

    const Cokernel inf = cokernel(relation(6, 5));
    bool some_infinite = false;
    for (std::size_t i = 0; i < 6; ++i) some_infinite |= !element_order(inf.basis_class(i), inf.group()).has_value();
    EXPECT_TRUE(some_infinite);
}

TEST(Generates, Examples) {
    const Cokernel z5 = cokernel(relation(4, 2));
    const GroupElement id[1] = {z5.identity()};
    EXPECT_FALSE(generates(id, z5.group()));

    const Cokernel inf = cokernel(relation(6, 5));
    const GroupElement one[1] = {inf.basis_class(0)};
    EXPECT_THROW(generates(one, inf.group()), Unsupported);
}

TEST(Generates, MatchesSubgroupEnumeration) {
    std::mt19937 rng(9);
    for (std::size_t n = 3; n <= 8; ++n) {
        for (std::size_t j = 0; j < n; ++j) {
            const Cokernel c = cokernel(relation(n, j));
            if (!c.group().finite()) continue;
            const std::size_t order = c.group().order()->convert_to<std::size_t>();
            for (int trial = 0; trial < 6; ++trial) {
                std::vector<GroupElement> elems;
                const std::size_t k = 1 + rng() % 2;
                for (std::size_t e = 0; e < k; ++e) {
                    std::vector<BigInt> v(n);
                    for (auto& x : v) x = static_cast<int>(rng() % 5) - 2;
                    elems.push_back(c.project(v));
                }
                ASSERT_EQ(generates(elems, c.group()), subgroup_size(c, elems) == order) << n << "," << j;
            }
        }
    }
}

TEST(AbelianGroup, FromCyclicFactors) {
    const BigInt f1[2] = {4, 6};
    EXPECT_EQ(AbelianGroup::from_cyclic_factors(f1).torsion, (std::vector<BigInt>{2, 12}));
    const BigInt f2[2] = {1, 5};
    EXPECT_EQ(AbelianGroup::from_cyclic_factors(f2).torsion, (std::vector<BigInt>{5}));
    const BigInt f3[2] = {0, 3};
    const AbelianGroup g = AbelianGroup::from_cyclic_factors(f3);
    EXPECT_EQ(g.free_rank, 1u);
    EXPECT_EQ(g.torsion, (std::vector<BigInt>{3}));
}

TEST(CirculantDetFloat, Examples) {
    const auto c42 = circulant_det_float(std::vector<BigInt>{1, -1, -1, 0});
    EXPECT_NEAR(c42.real(), -5.0, 1e-9);
    EXPECT_NEAR(c42.imag(), 0.0, 1e-9);
    EXPECT_NEAR(circulant_det_float(std::vector<BigInt>{1}).real(), 1.0, 1e-12);
    EXPECT_NEAR(circulant_det_float(std::vector<BigInt>{1, -2}).real(), -3.0, 1e-12);
}

TEST(CirculantDetFloat, AgreesWithExactDeterminant) {
    for (std::size_t n = 1; n <= 24; ++n) {
        for (std::size_t j = 0; j < n; ++j) {
            const IntMatrix m = relation(n, j);
            const BigInt det = determinant(m);
            const double exact = det.convert_to<double>();
            const auto approx = circulant_det_float(m.row(0));
            ASSERT_LE(std::abs(approx - std::complex<double>(exact, 0.0)), 1e-6 * std::max(1.0, std::abs(exact)))
                << n << "," << j;
        }
    }
}
