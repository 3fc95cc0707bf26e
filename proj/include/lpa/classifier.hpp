#ifndef LPA_CLASSIFIER_HPP
#define LPA_CLASSIFIER_HPP

#include "lpa/bigint.hpp"
#include "lpa/exact_linalg.hpp"
#include "lpa/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lpa {

/// K_0 of the Leavitt path algebra of a finite graph, read off the cokernel
/// of I - A^t.
struct K0Report {
    std::size_t n = 0;
    std::size_t j = 0;
    StructuralReport structure;
    BigInt det;
    BigInt h;  // |det|
    AbelianGroup group;
    std::vector<GroupElement> basis_classes;
    GroupElement sigma_class;
    bool sigma_is_identity = false;
};

/// Report for an arbitrary graph; n is its vertex count and j is left at 0.
K0Report k0_report(const Graph& g);

/// Report for C_n^j. Throws InternalError if a proven property of Cayley
/// graphs (pis, unit class is the identity, det <= 0) fails.
K0Report k0_report(std::size_t n, std::size_t j);

/// K_0(C_n^2) == Z_{d(n)} x Z_{H_2(n)/d(n)}, with d and H_2 taken from the
/// number-theoretic routes rather than the matrix.
bool verify_theorem_c2(std::size_t n);

/// (K_0(C_n^2) is cyclic) <=> (n in {2, 4} or n = 1, 5 mod 6).
bool verify_cyclic_criterion(std::size_t n);

enum class RealizationKind { Leavitt, MatrixLeavitt, ThreeVertex };

/// Leavitt(m): L(1,m) via the rose R_m. MatrixLeavitt(d, m): M_d(L(1,m)) via
/// R_m^d. ThreeVertex(d, q): the graph E_n with loop counts (2, 2+d, 2+q).
struct RealizationDescriptor {
    RealizationKind kind = RealizationKind::Leavitt;
    BigInt m;  // Leavitt, MatrixLeavitt
    BigInt d;  // MatrixLeavitt, ThreeVertex
    BigInt q;  // ThreeVertex
    Graph witness_graph;
};

std::string to_string(RealizationKind kind);

/// Witness graphs are stored edge by edge; larger ones raise ResourceLimit.
inline constexpr std::size_t kMaxWitnessEdges = std::size_t{1} << 25;

/// j = 0 -> Leavitt(2); j = 1 -> MatrixLeavitt(2^n - 1, 2^n);
/// j = 2 -> MatrixLeavitt(H, H + 1) when K_0 is cyclic of order H, otherwise
/// ThreeVertex(d(n), H_2(n)/d(n)). Other j raise Unsupported.
RealizationDescriptor realization(std::size_t n, std::size_t j);

struct KPCertificate {
    bool groups_isomorphic = false;
    bool identity_condition = false;
    bool det_signs_compatible = false;
    bool verdict = false;
    BigInt det_a;
    BigInt det_b;
    AbelianGroup group_a;
    AbelianGroup group_b;
    std::string note;
};

/// Sufficient check for the hypotheses of the algebraic Kirchberg-Phillips
/// theorem. The unit-class condition is certified only when both unit classes
/// are the identity. Throws NotApplicable unless both graphs are pis.
KPCertificate kp_certificate(const Graph& a, const Graph& b);

struct StepsReport {
    bool step1 = false;    // every [v_i] has order dividing H_2(n)/d(n)
    bool lemma_x = false;  // d(n) x = 0
    bool step2 = false;    // {x, [v_1]} or {x, [v_n]} generates
    bool uses_vn = false;  // true when the {x, [v_n]} branch was used (n = 0 mod 6)

    bool all() const { return step1 && lemma_x && step2; }
};

/// Throws Unsupported for n < 3.
StepsReport verify_steps(std::size_t n);

/// Oracle-vs-cokernel agreement for a single graph at a given cap.
struct MonoidCrossReport {
    std::size_t n = 0;
    std::size_t cap = 0;
    bool sound = false;           // no merged pair projects to different classes
    bool zero_isolated = false;
    std::size_t reachable_classes = 0;
    std::optional<BigInt> group_order;
    bool count_matches = false;   // reachable_classes == |K_0| (finite K_0 only)
    std::optional<bool> identity_check;  // nullopt when 2n exceeds the cap
};

MonoidCrossReport monoid_cross_check(const Graph& g, std::size_t cap);

}  // namespace lpa

#endif  // LPA_CLASSIFIER_HPP
