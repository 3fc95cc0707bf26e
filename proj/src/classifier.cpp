#include "lpa/classifier.hpp"

#include "lpa/error.hpp"
#include "lpa/monoid_oracle.hpp"
#include "lpa/sequences.hpp"

#include <map>
#include <string>

namespace lpa {

namespace {

bool same_sign_or_zero(const BigInt& a, const BigInt& b) {
    return (a >= 0 && b >= 0) || (a <= 0 && b <= 0);
}

void require_edges_within_limit(const BigInt& edges, const char* what) {
    if (edges > kMaxWitnessEdges) {
        throw ResourceLimit(std::string(what) + " witness graph needs " + edges.str() +
                            " edges, above the limit of " + std::to_string(kMaxWitnessEdges));
    }
}

std::size_t to_size(const BigInt& x) { return x.convert_to<std::size_t>(); }

RealizationDescriptor leavitt_two() {
    RealizationDescriptor r;
    r.kind = RealizationKind::Leavitt;
    r.m = 2;
    r.witness_graph = rose_graph(2);
    return r;
}

// M_d(L(1, d + 1)) for a cyclic K_0 of order d whose unit class is zero.
RealizationDescriptor matrix_leavitt_for_order(const BigInt& order) {
    if (order == 1) return leavitt_two();
    RealizationDescriptor r;
    r.kind = RealizationKind::MatrixLeavitt;
    r.d = order;
    r.m = order + 1;
    require_edges_within_limit(r.d - 1 + r.m, "MatrixLeavitt");
    r.witness_graph = rose_tail_graph(to_size(r.m), to_size(r.d));
    return r;
}

}  // namespace

std::string to_string(RealizationKind kind) {
    switch (kind) {
        case RealizationKind::Leavitt: return "Leavitt";
        case RealizationKind::MatrixLeavitt: return "MatrixLeavitt";
        case RealizationKind::ThreeVertex: return "ThreeVertex";
    }
    return "unknown";
}

K0Report k0_report(const Graph& g) {
    K0Report r;
    r.n = g.vertex_count();
    r.structure = structural_report(g);
    const IntMatrix m = k0_relation_matrix(g);
    r.det = determinant(m);
    r.h = abs_value(r.det);
    const Cokernel coker = cokernel(m);
    r.group = coker.group();
    for (std::size_t i = 0; i < r.n; ++i) r.basis_classes.push_back(coker.basis_class(i));
    r.sigma_class = coker.project(std::vector<BigInt>(r.n, 1));
    r.sigma_is_identity = coker.is_identity(r.sigma_class);

    // |coker| = |det| when det != 0, and coker is infinite exactly when det = 0
    const auto order = r.group.order();
    if (r.det == 0 ? order.has_value() : (!order || *order != r.h)) {
        throw InternalError("cokernel order disagrees with determinant " + r.det.str());
    }
    return r;
}

K0Report k0_report(std::size_t n, std::size_t j) {
    K0Report r = k0_report(cayley_graph(n, j));
    r.j = j;
    if (!r.structure.pis) throw InternalError("C_n^j failed the pis structural test");
    if (!r.sigma_is_identity) throw InternalError("sum of vertex classes is not the identity");
    if (r.det > 0) throw InternalError("det(I - A^t) is positive for a Cayley graph");
    return r;
}

bool verify_theorem_c2(std::size_t n) {
    const AbelianGroup actual = cokernel(k0_relation_matrix(cayley_graph(n, 2))).group();
    const BigInt d = d_gcd(n);
    const BigInt h2 = h2_recursive(n);
    const BigInt factors[2] = {d, exact_div(h2, d, "H2(n)/d(n)")};
    return actual == AbelianGroup::from_cyclic_factors(factors);
}

bool verify_cyclic_criterion(std::size_t n) {
    const AbelianGroup g = cokernel(k0_relation_matrix(cayley_graph(n, 2))).group();
    const bool cyclic = g.finite() && g.cyclic();
    const bool listed = n == 2 || n == 4 || n % 6 == 1 || n % 6 == 5;
    return cyclic == listed;
}

RealizationDescriptor realization(std::size_t n, std::size_t j) {
    if (n == 0) throw InvalidParameter("realization requires n >= 1");
    switch (j) {
        case 0:
            return leavitt_two();
        case 1: {
            if (n == 1) return leavitt_two();  // C_1^1 = C_1^0
            if (n >= 64) throw ResourceLimit("2^n witness graph for n = " + std::to_string(n));
            return matrix_leavitt_for_order((BigInt(1) << n) - 1);
        }
        case 2: {
            const AbelianGroup g = cokernel(k0_relation_matrix(cayley_graph(n, 2))).group();
            if (g.finite() && g.cyclic()) return matrix_leavitt_for_order(*g.order());
            RealizationDescriptor r;
            r.kind = RealizationKind::ThreeVertex;
            r.d = d_gcd(n);
            r.q = exact_div(h2_recursive(n), r.d, "H2(n)/d(n)");
            require_edges_within_limit(r.d + r.q + 12, "ThreeVertex");
            r.witness_graph = en_graph(to_size(r.d), to_size(r.q));
            return r;
        }
        default:
            throw Unsupported("realization is only available for j in {0, 1, 2}, got j = " + std::to_string(j));
    }
}

KPCertificate kp_certificate(const Graph& a, const Graph& b) {
    const K0Report ra = k0_report(a);
    const K0Report rb = k0_report(b);
    if (!ra.structure.pis) throw NotApplicable("first graph is not purely infinite simple");
    if (!rb.structure.pis) throw NotApplicable("second graph is not purely infinite simple");

    KPCertificate c;
    c.det_a = ra.det;
    c.det_b = rb.det;
    c.group_a = ra.group;
    c.group_b = rb.group;
    c.groups_isomorphic = ra.group == rb.group;
    c.identity_condition = ra.sigma_is_identity && rb.sigma_is_identity;
    c.det_signs_compatible = same_sign_or_zero(ra.det, rb.det);
    c.verdict = c.groups_isomorphic && c.identity_condition && c.det_signs_compatible;
    if (!c.groups_isomorphic) {
        c.note = "K0 groups are not isomorphic";
    } else if (!c.identity_condition) {
        c.note = "unit classes are not both the identity; inconclusive by this method";
    } else if (!c.det_signs_compatible) {
        c.note = "determinants have opposite signs";
    } else {
        c.note = "hypotheses of the algebraic KP theorem hold";
    }
    return c;
}

StepsReport verify_steps(std::size_t n) {
    if (n < 3) throw Unsupported("verify_steps requires n >= 3, got " + std::to_string(n));
    const Cokernel coker = cokernel(k0_relation_matrix(cayley_graph(n, 2)));
    const auto f = fibonacci_table(n);
    const BigInt d = gcd(f[n], f[n - 1] - 1);
    const BigInt bound = exact_div(h2_recursive(n), d, "H2(n)/d(n)");

    StepsReport s;
    s.step1 = true;
    for (std::size_t i = 0; i < n; ++i) {
        const auto order = element_order(coker.basis_class(i), coker.group());
        if (!order || bound % *order != 0) {
            s.step1 = false;
            break;
        }
    }

    std::vector<BigInt> xv(n);
    xv[0] = exact_div(f[n - 1] - 1, d, "(F(n-1)-1)/d(n)");
    xv[n - 1] = exact_div(f[n], d, "F(n)/d(n)");
    const GroupElement x = coker.project(xv);
    s.lemma_x = coker.is_identity(coker.scale(d, x));

    s.uses_vn = n % 6 == 0;
    const GroupElement pair[2] = {x, coker.basis_class(s.uses_vn ? n - 1 : 0)};
    s.step2 = generates(pair, coker.group());
    return s;
}

MonoidCrossReport monoid_cross_check(const Graph& g, std::size_t cap) {
    const MonoidTable table = enumerate_classes(g, cap);
    const Cokernel coker = cokernel(k0_relation_matrix(g));
    const std::size_t n = g.vertex_count();

    MonoidCrossReport r;
    r.n = n;
    r.cap = cap;
    r.sound = true;
    std::map<std::size_t, GroupElement> image;
    std::vector<BigInt> v(n);
    for (std::size_t rank = 0; rank < table.vector_count() && r.sound; ++rank) {
        const MonoidVector x = table.index().unrank(rank);
        for (std::size_t i = 0; i < n; ++i) v[i] = x[i];
        GroupElement e = coker.project(v);
        auto [it, inserted] = image.try_emplace(table.class_of_rank(rank), e);
        if (!inserted && !(it->second == e)) r.sound = false;
    }

    r.zero_isolated = table.class_size(MonoidVector(n, 0)) == 1;
    r.reachable_classes = class_count_reachable(table);
    r.group_order = coker.group().order();
    r.count_matches = r.group_order && BigInt(r.reachable_classes) == *r.group_order;
    if (2 * n <= cap) r.identity_check = identity_class_check(g, table);
    return r;
}

}  // namespace lpa
