#ifndef LPA_GRAPH_HPP
#define LPA_GRAPH_HPP

#include "lpa/int_matrix.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace lpa {

using Edge = std::pair<std::size_t, std::size_t>;  // (source, target), 0-based

/// Finite directed multigraph. Parallel edges are repeated entries; the edge
/// list is kept sorted so that structurally equal graphs compare equal.
class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const { return n_vertices_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::vector<std::size_t> out_degrees() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph make_graph(std::size_t, std::vector<Edge>);

    std::size_t n_vertices_ = 0;
    std::vector<Edge> edges_;
};

/// Throws InvalidParameter when n_vertices == 0 and InvalidGraph naming the
/// first edge with an endpoint outside [0, n_vertices).
Graph make_graph(std::size_t n_vertices, std::vector<Edge> edges);

/// The Cayley graph C_n^j: vertex i emits one edge to i+1 and one to i+j (mod n).
/// j is reduced mod n.
Graph cayley_graph(std::size_t n, std::size_t j);

/// One vertex carrying m loops (realizes L(1,m)).
Graph rose_graph(std::size_t m);

/// R_m^d: d-1 edges from vertex 0 to vertex 1 and m loops at vertex 1.
/// Requires m >= 2 and d >= 2.
Graph rose_tail_graph(std::size_t m, std::size_t d);

/// Three vertices, one edge between every ordered pair of distinct vertices,
/// and loop counts 2, 2+d, 2+q.
Graph en_graph(std::size_t d, std::size_t q);

/// Entry (i, k) counts edges i -> k.
IntMatrix incidence_matrix(const Graph& g);

/// I - A^t, the relation matrix whose cokernel is K_0.
IntMatrix k0_relation_matrix(const Graph& g);

struct StructuralReport {
    bool sink_free = false;
    bool condition_L = false;
    bool cofinal = false;
    bool pis = false;

    friend bool operator==(const StructuralReport&, const StructuralReport&) = default;
};

/// Sink-freeness, Condition (L) and cofinality (every vertex reaches every
/// cycle). pis is their conjunction.
StructuralReport structural_report(const Graph& g);

}  // namespace lpa

#endif  // LPA_GRAPH_HPP
