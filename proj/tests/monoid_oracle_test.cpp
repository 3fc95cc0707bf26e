#include "lpa/error.hpp"
#include "lpa/exact_linalg.hpp"
#include "lpa/monoid_oracle.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace lpa;

namespace {

MonoidVector multiple(std::size_t n, std::size_t i, std::uint32_t k) {
    MonoidVector v(n, 0);
    v[i] = k;
    return v;
}

std::vector<BigInt> widen(const MonoidVector& v) { return {v.begin(), v.end()}; }

// Every merge the oracle made must survive projection to the cokernel.
void expect_sound(const MonoidTable& t) {
    const Cokernel c = cokernel(k0_relation_matrix(t.graph()));
    std::map<std::size_t, GroupElement> image_of_root;
    for (std::size_t r = 0; r < t.vector_count(); ++r) {
        const GroupElement img = c.project(widen(t.index().unrank(r)));
        const auto [it, fresh] = image_of_root.try_emplace(t.class_of_rank(r), img);
        ASSERT_TRUE(fresh || it->second == img) << "rank " << r;
    }
}

void expect_zero_isolated(const MonoidTable& t) {
    const MonoidVector zero(t.graph().vertex_count(), 0);
    EXPECT_EQ(t.class_size(zero), 1u);
}

}  // namespace

TEST(SimplexIndex, RankUnrankRoundTrip) {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (std::size_t cap = 0; cap <= 6; ++cap) {
            const SimplexIndex idx(n, cap);
            std::size_t expected = 1;  // C(cap + n, n)
            for (std::size_t i = 1; i <= n; ++i) expected = expected * (cap + i) / i;
            ASSERT_EQ(idx.size(), expected);
            MonoidVector prev;
            for (std::size_t r = 0; r < idx.size(); ++r) {
                const MonoidVector v = idx.unrank(r);
                ASSERT_EQ(idx.rank(v), r);
                if (r > 0) ASSERT_LT(prev, v);
                prev = v;
            }
        }
    }
}

TEST(EnumerateClasses, C42SixV1IsV1) {
    const MonoidTable t = enumerate_classes(cayley_graph(4, 2), 12);
    EXPECT_TRUE(t.same_class(multiple(4, 0, 6), multiple(4, 0, 1)));
    for (std::uint32_t a = 1; a <= 5; ++a)
        for (std::uint32_t b = a + 1; b <= 5; ++b)
            EXPECT_FALSE(t.same_class(multiple(4, 0, a), multiple(4, 0, b))) << a << "," << b;
}

TEST(EnumerateClasses, C32FourClasses) {
    const MonoidTable t = enumerate_classes(cayley_graph(3, 2), 12);
    EXPECT_EQ(class_count_reachable(t), 4u);
    const MonoidVector sigma{1, 1, 1};
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_FALSE(t.same_class(multiple(3, i, 1), sigma));
        for (std::size_t k = i + 1; k < 3; ++k) EXPECT_FALSE(t.same_class(multiple(3, i, 1), multiple(3, k, 1)));
    }
}

TEST(EnumerateClasses, CapZero) {
    const MonoidTable t = enumerate_classes(cayley_graph(4, 2), 0);
    EXPECT_EQ(t.vector_count(), 1u);
    EXPECT_EQ(class_count_reachable(t), 0u);
}

TEST(EnumerateClasses, BudgetExceeded) {
    EXPECT_THROW(enumerate_classes(cayley_graph(12, 2), 20), ResourceLimit);
    EXPECT_THROW(enumerate_classes(cayley_graph(4, 2), 12, 100), ResourceLimit);
}

TEST(SameClass, Examples) {
    const MonoidTable t = enumerate_classes(cayley_graph(4, 2), 12);
    EXPECT_TRUE(same_class(MonoidVector{1, 0, 0, 0}, MonoidVector{0, 1, 1, 0}, t));
    EXPECT_TRUE(same_class(MonoidVector{1, 0, 0, 0}, MonoidVector{0, 0, 0, 2}, t));
    EXPECT_FALSE(same_class(MonoidVector{0, 0, 0, 0}, MonoidVector{1, 0, 0, 0}, t));
}

TEST(SameClass, OutOfRegion) {
    const MonoidTable t = enumerate_classes(cayley_graph(4, 2), 6);
    EXPECT_THROW(t.class_of(MonoidVector{7, 0, 0, 0}), OutOfRegion);
    EXPECT_THROW(t.class_of(MonoidVector{1, 0, 0}), OutOfRegion);
    EXPECT_THROW(same_class(MonoidVector{1, 0, 0, 0}, MonoidVector{4, 4, 0, 0}, t), OutOfRegion);
}

TEST(IdentityClass, Examples) {
    EXPECT_TRUE(identity_class_check(cayley_graph(4, 2), enumerate_classes(cayley_graph(4, 2), 12)));
    EXPECT_TRUE(identity_class_check(cayley_graph(3, 2), enumerate_classes(cayley_graph(3, 2), 12)));
    EXPECT_TRUE(identity_class_check(cayley_graph(5, 1), enumerate_classes(cayley_graph(5, 1), 14)));
    EXPECT_THROW(identity_class_check(cayley_graph(4, 2), enumerate_classes(cayley_graph(4, 2), 7)), OutOfRegion);
}

TEST(ReachableClasses, Examples) {
    EXPECT_EQ(class_count_reachable(enumerate_classes(cayley_graph(4, 2), 12)), 5u);
    EXPECT_EQ(class_count_reachable(enumerate_classes(cayley_graph(3, 2), 12)), 4u);
    EXPECT_EQ(class_count_reachable(enumerate_classes(cayley_graph(2, 0), 10)), 1u);
}

TEST(ReachableClasses, StableAndEqualToGroupOrderForSmallCayleyGraphs) {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t j = 0; j < n; ++j) {
            const Graph g = cayley_graph(n, j);
            const std::size_t cap = default_cap(n);
            const std::size_t at_cap = class_count_reachable(enumerate_classes(g, cap));
            const std::size_t above = class_count_reachable(enumerate_classes(g, cap + 2));
            EXPECT_EQ(at_cap, above) << n << "," << j;
            const auto order = cokernel(k0_relation_matrix(g)).group().order();
            ASSERT_TRUE(order);
            EXPECT_EQ(BigInt(at_cap), *order) << n << "," << j;
        }
    }
}

TEST(Oracle, SoundAndZeroIsolated) {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (std::size_t j = 0; j < n; ++j) {
            const Graph g = cayley_graph(n, j);
            const MonoidTable t = enumerate_classes(g, default_cap(n));
            expect_sound(t);
            expect_zero_isolated(t);
        }
    }
    for (const Graph& g : {rose_graph(3), rose_tail_graph(4, 3), en_graph(2, 3)}) {
        const MonoidTable t = enumerate_classes(g, 9);
        expect_sound(t);
        expect_zero_isolated(t);
    }
}

TEST(Oracle, RaisingTheCapNeverSplitsAClass) {
    for (std::size_t j = 0; j < 4; ++j) {
        const Graph g = cayley_graph(4, j);
        const MonoidTable lo = enumerate_classes(g, 8);
        const MonoidTable hi = enumerate_classes(g, 11);
        for (std::size_t r = 0; r < lo.vector_count(); ++r) {
            const MonoidVector x = lo.index().unrank(r);
            const MonoidVector root = lo.index().unrank(lo.class_of_rank(r));
            ASSERT_TRUE(hi.same_class(x, root));
        }
    }
}

TEST(DefaultCap, Values) {
    EXPECT_EQ(default_cap(3), 12u);
    EXPECT_EQ(default_cap(4), 12u);
    EXPECT_EQ(default_cap(5), 10u);
}
