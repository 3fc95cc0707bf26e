#include "lpa/monoid_oracle.hpp"

#include "lpa/bigint.hpp"
#include "lpa/error.hpp"

#include <numeric>
#include <string>
#include <unordered_set>

namespace lpa {

namespace {

// Lexicographic successor among vectors with sum <= cap. Returns false after
// the last vector.
bool next_vector(MonoidVector& x, std::size_t& sum, std::size_t cap) {
    const std::size_t n = x.size();
    if (n == 0) return false;
    if (sum < cap) {
        ++x[n - 1];
        ++sum;
        return true;
    }
    // Sum is at the cap: grow the rightmost position whose prefix sum is
    // below the cap and clear everything after it.
    std::size_t suffix = 0;
    for (std::size_t i = n - 1; i-- > 0;) {
        suffix += x[i + 1];
        const std::size_t prefix = sum - suffix;
        if (prefix < cap) {
            for (std::size_t k = i + 1; k < n; ++k) x[k] = 0;
            ++x[i];
            sum = prefix + 1;
            return true;
        }
    }
    return false;
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;  // the smallest rank represents the class
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

SimplexIndex::SimplexIndex(std::size_t n, std::size_t cap)
    : n_(n), cap_(cap), binom_(n + 1, std::vector<std::size_t>(cap + 1, 1)) {
    for (std::size_t k = 1; k <= n; ++k) {
        std::size_t running = 0;
        for (std::size_t s = 0; s <= cap; ++s) {
            running += binom_[k - 1][s];
            binom_[k][s] = running;
        }
    }
    size_ = binom_[n][cap];
}

std::size_t SimplexIndex::rank(std::span<const std::uint32_t> x) const {
    std::size_t r = 0;
    std::size_t rem = cap_;
    for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t k = n_ - i - 1;
        // vectors sharing the prefix with a smaller value at position i
        r += count(k + 1, rem) - (x[i] <= rem ? count(k + 1, rem - x[i]) : 0);
        rem -= x[i];
    }
    return r;
}

MonoidVector SimplexIndex::unrank(std::size_t r) const {
    MonoidVector x(n_, 0);
    std::size_t rem = cap_;
    for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t k = n_ - i - 1;
        std::uint32_t v = 0;
        while (r >= count(k, rem - v)) {
            r -= count(k, rem - v);
            ++v;
        }
        x[i] = v;
        rem -= v;
    }
    return x;
}

MonoidTable::MonoidTable(Graph g, std::size_t cap)
    : graph_(std::move(g)), cap_(cap), index_(graph_.vertex_count(), cap) {}

MonoidTable enumerate_classes(const Graph& g, std::size_t sum_cap, std::size_t budget) {
    const std::size_t n = g.vertex_count();
    // C(cap + n, n), computed exactly before any table is allocated
    BigInt region = 1;
    for (std::size_t i = 1; i <= n; ++i) region = region * (sum_cap + i) / i;
    if (region > budget) {
        throw ResourceLimit("monoid region of " + region.str() + " vectors (n=" + std::to_string(n) +
                            ", cap=" + std::to_string(sum_cap) + ") exceeds budget " +
                            std::to_string(budget));
    }

    MonoidTable table(g, sum_cap);
    const std::size_t size = table.index_.size();

    std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n, 0));
    for (const auto& [s, t] : g.edges()) ++rows[s][t];
    const auto deg = g.out_degrees();

    UnionFind uf(size);
    MonoidVector x(n, 0);
    MonoidVector y(n, 0);
    std::size_t sum = 0;
    std::size_t r = 0;
    do {
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] == 0 || deg[i] == 0) continue;
            if (sum - 1 + deg[i] > sum_cap) continue;
            for (std::size_t k = 0; k < n; ++k) y[k] = x[k] + static_cast<std::uint32_t>(rows[i][k]);
            --y[i];
            uf.unite(r, table.index_.rank(y));
        }
        ++r;
    } while (next_vector(x, sum, sum_cap));
    if (r != size) throw InternalError("monoid table enumeration visited " + std::to_string(r) + " of " + std::to_string(size));

    table.root_.resize(size);
    for (std::size_t i = 0; i < size; ++i) table.root_[i] = uf.find(i);
    return table;
}

std::size_t MonoidTable::class_of(std::span<const std::uint32_t> x) const {
    if (x.size() != graph_.vertex_count()) {
        throw OutOfRegion("vector of length " + std::to_string(x.size()) + " for a graph with " +
                          std::to_string(graph_.vertex_count()) + " vertices");
    }
    std::size_t sum = 0;
    for (auto v : x) sum += v;
    if (sum > cap_) {
        throw OutOfRegion("vector with coordinate sum " + std::to_string(sum) + " above cap " +
                          std::to_string(cap_));
    }
    return root_[index_.rank(x)];
}

bool MonoidTable::same_class(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) const {
    return class_of(x) == class_of(y);
}

std::size_t MonoidTable::class_size(std::span<const std::uint32_t> x) const {
    const std::size_t c = class_of(x);
    std::size_t count = 0;
    for (std::size_t root : root_)
        if (root == c) ++count;
    return count;
}

bool same_class(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y, const MonoidTable& t) {
    return t.same_class(x, y);
}

bool identity_class_check(const Graph& g, const MonoidTable& t) {
    if (!(g == t.graph())) throw InvalidParameter("identity_class_check: table was built for another graph");
    const MonoidVector sigma(g.vertex_count(), 1);
    const MonoidVector twice(g.vertex_count(), 2);
    return t.same_class(sigma, twice);
}

std::size_t class_count_reachable(const MonoidTable& t) {
    const std::size_t n = t.graph().vertex_count();
    const std::size_t core = t.cap() / 2;
    std::unordered_set<std::size_t> classes;
    MonoidVector x(n, 0);
    std::size_t sum = 0;
    std::size_t r = 0;
    do {
        if (sum > 0 && sum <= core) classes.insert(t.class_of_rank(r));
        ++r;
    } while (next_vector(x, sum, t.cap()));
    return classes.size();
}

std::size_t default_cap(std::size_t n) { return n == 5 ? 10 : 12; }

}  // namespace lpa
