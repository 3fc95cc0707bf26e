#ifndef LPA_MONOID_ORACLE_HPP
#define LPA_MONOID_ORACLE_HPP

#include "lpa/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lpa {

using MonoidVector = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultVectorBudget = 2'000'000;

// Dense ranking of the vectors of length n with coordinate sum <= cap, in
// lexicographic order.
class SimplexIndex {
public:
    SimplexIndex(std::size_t n, std::size_t cap);

    std::size_t size() const { return size_; }
    std::size_t rank(std::span<const std::uint32_t> x) const;
    MonoidVector unrank(std::size_t r) const;

private:
    // count(k, s): vectors of length k with sum <= s
    std::size_t count(std::size_t k, std::size_t s) const { return binom_[k][s]; }

    std::size_t n_;
    std::size_t cap_;
    std::size_t size_;
    std::vector<std::vector<std::size_t>> binom_;
};

/// Bounded closure of the graph-monoid congruence: every vector with
/// coordinate sum <= cap, partitioned by the moves x <-> x - e_i + row_i(A)
/// that stay inside the region. Merges are always genuine equalities in M_E;
/// separations are only "not merged at this cap".
class MonoidTable {
public:
    const Graph& graph() const { return graph_; }
    std::size_t cap() const { return cap_; }
    std::size_t vector_count() const { return index_.size(); }
    const SimplexIndex& index() const { return index_; }

    /// Representative id of x's class. Throws OutOfRegion when x is not in the
    /// table (wrong length or sum above the cap).
    std::size_t class_of(std::span<const std::uint32_t> x) const;
    std::size_t class_of_rank(std::size_t rank) const { return root_[rank]; }

    bool same_class(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) const;

    /// Number of vectors in x's class.
    std::size_t class_size(std::span<const std::uint32_t> x) const;

private:
    friend MonoidTable enumerate_classes(const Graph&, std::size_t, std::size_t);

    MonoidTable(Graph g, std::size_t cap);

    Graph graph_;
    std::size_t cap_;
    SimplexIndex index_;
    std::vector<std::size_t> root_;
};

/// Throws ResourceLimit when C(cap + n, n) exceeds the budget.
MonoidTable enumerate_classes(const Graph& g, std::size_t sum_cap,
                              std::size_t budget = kDefaultVectorBudget);

bool same_class(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y,
                const MonoidTable& t);

/// class(2 sigma) == class(sigma) for sigma = (1, ..., 1). Throws OutOfRegion
/// when 2n exceeds the cap.
bool identity_class_check(const Graph& g, const MonoidTable& t);

/// Distinct classes among the nonzero vectors of coordinate sum <= cap / 2.
/// Sums of two such vectors stay inside the table, which is what makes the
/// truncated closure agree with M_E on this core.
std::size_t class_count_reachable(const MonoidTable& t);

/// 12 for n <= 4 and n >= 6, 10 for n == 5.
std::size_t default_cap(std::size_t n);

}  // namespace lpa

#endif  // LPA_MONOID_ORACLE_HPP
