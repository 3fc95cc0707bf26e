#include "lpa/graph.hpp"

#include "lpa/error.hpp"

#include <algorithm>
#include <string>

namespace lpa {

namespace {

// Vertices reachable from `start` by a directed path of length >= 0.
std::vector<bool> reachable_from(std::size_t start, const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<bool> seen(adj.size(), false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

}  // namespace

std::vector<std::size_t> Graph::out_degrees() const {
    std::vector<std::size_t> deg(n_vertices_, 0);
    for (const auto& [s, t] : edges_) ++deg[s];
    return deg;
}

Graph make_graph(std::size_t n_vertices, std::vector<Edge> edges) {
    if (n_vertices == 0) throw InvalidParameter("graph must have at least one vertex");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& [s, t] = edges[i];
        if (s >= n_vertices || t >= n_vertices) {
            throw InvalidGraph("edge " + std::to_string(i) + " (" + std::to_string(s) + ", " +
                               std::to_string(t) + ") has an endpoint outside [0, " +
                               std::to_string(n_vertices) + ")");
        }
    }
    std::sort(edges.begin(), edges.end());
    Graph g;
    g.n_vertices_ = n_vertices;
    g.edges_ = std::move(edges);
    return g;
}

Graph cayley_graph(std::size_t n, std::size_t j) {
    if (n == 0) throw InvalidParameter("cayley_graph requires n >= 1");
    j %= n;
    std::vector<Edge> edges;
    edges.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, (i + j) % n);
    }
    return make_graph(n, std::move(edges));
}

Graph rose_graph(std::size_t m) {
    if (m == 0) throw InvalidParameter("rose_graph requires m >= 1");
    return make_graph(1, std::vector<Edge>(m, Edge{0, 0}));
}

Graph rose_tail_graph(std::size_t m, std::size_t d) {
    if (m < 2 || d < 2) {
        throw InvalidParameter("rose_tail_graph requires m >= 2 and d >= 2 (got m=" +
                               std::to_string(m) + ", d=" + std::to_string(d) + ")");
    }
    std::vector<Edge> edges(d - 1, Edge{0, 1});
    edges.insert(edges.end(), m, Edge{1, 1});
    return make_graph(2, std::move(edges));
}

Graph en_graph(std::size_t d, std::size_t q) {
    if (d == 0 || q == 0) throw InvalidParameter("en_graph requires d >= 1 and q >= 1");
    std::vector<Edge> edges;
    edges.reserve(6 + 6 + d + q);
    const std::size_t loops[3] = {2, 2 + d, 2 + q};
    for (std::size_t u = 0; u < 3; ++u) {
        edges.insert(edges.end(), loops[u], Edge{u, u});
        for (std::size_t w = 0; w < 3; ++w)
            if (w != u) edges.emplace_back(u, w);
    }
    return make_graph(3, std::move(edges));
}

IntMatrix incidence_matrix(const Graph& g) {
    IntMatrix a(g.vertex_count(), g.vertex_count());
    for (const auto& [s, t] : g.edges()) a(s, t) += 1;
    return a;
}

IntMatrix k0_relation_matrix(const Graph& g) {
    return IntMatrix::identity(g.vertex_count()) - incidence_matrix(g).transpose();
}

StructuralReport structural_report(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const auto deg = g.out_degrees();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& [s, t] : g.edges()) adj[s].push_back(t);
    for (auto& a : adj) a.erase(std::unique(a.begin(), a.end()), a.end());

    StructuralReport r;
    r.sink_free = std::all_of(deg.begin(), deg.end(), [](std::size_t k) { return k > 0; });

    std::vector<std::vector<bool>> reach(n);
    for (std::size_t v = 0; v < n; ++v) reach[v] = reachable_from(v, adj);

    // v lies on a cycle iff some successor reaches v.
    std::vector<bool> on_cycle(n, false);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w : adj[v])
            if (reach[w][v]) on_cycle[v] = true;

    // A cycle without an exit is a cycle all of whose vertices emit exactly one
    // edge. Such a cycle lives inside the functional subgraph of out-degree-1
    // vertices, so it suffices to follow those edges from every start.
    r.condition_L = true;
    for (std::size_t v = 0; v < n && r.condition_L; ++v) {
        std::size_t cur = v;
        for (std::size_t steps = 0; steps <= n; ++steps) {
            if (deg[cur] != 1) break;
            cur = adj[cur].front();
            if (cur == v) {
                r.condition_L = false;
                break;
            }
        }
    }

    // Every vertex of a cycle reaches every other, so reaching one vertex of a
    // cycle is equivalent to reaching all of it.
    r.cofinal = true;
    for (std::size_t v = 0; v < n && r.cofinal; ++v)
        for (std::size_t c = 0; c < n; ++c)
            if (on_cycle[c] && !reach[v][c]) {
                r.cofinal = false;
                break;
            }

    r.pis = r.sink_free && r.condition_L && r.cofinal;
    return r;
}

}  // namespace lpa
