#include "lpa/json_io.hpp"

#include "lpa/error.hpp"

#include <ostream>
#include <string>

namespace lpa::json_io {

namespace {

Json big_list(std::span<const BigInt> xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(x.str());
    return a;
}

std::size_t index_field(const Json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw InvalidGraph(where + ": expected a non-negative integer, got " + v.dump());
    }
    return v.get<std::size_t>();
}

}  // namespace

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (const auto& [s, t] : g.edges()) edges.push_back(Json::array({s, t}));
    Json j;
    j["n"] = g.vertex_count();
    j["edges"] = std::move(edges);
    return j;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "{\"n\":" << g.vertex_count() << ",\"edges\":[";
    bool first = true;
    for (const auto& [s, t] : g.edges()) {
        out << (first ? "[" : ",[") << s << ',' << t << ']';
        first = false;
    }
    out << "]}";
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidGraph("graph: expected a JSON object");
    if (!j.contains("n")) throw InvalidGraph("graph: missing field \"n\"");
    if (!j.contains("edges")) throw InvalidGraph("graph: missing field \"edges\"");
    const std::size_t n = index_field(j.at("n"), "n");
    if (n == 0) throw InvalidGraph("n: a graph needs at least one vertex");
    const Json& raw = j.at("edges");
    if (!raw.is_array()) throw InvalidGraph("edges: expected an array");
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        const Json& e = raw[i];
        if (!e.is_array() || e.size() != 2) throw InvalidGraph(where + ": expected [source, target]");
        edges.emplace_back(index_field(e[0], where + "[0]"), index_field(e[1], where + "[1]"));
    }
    return make_graph(n, std::move(edges));
}

Graph parse_graph(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidGraph(std::string("malformed graph JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
    }
    return graph_from_json(j);
}

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(big_list(m.row(r)));
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = std::move(rows);
    return j;
}

IntMatrix matrix_from_json(const Json& j) {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const Json& entries = j.at("entries");
    if (entries.size() != rows) throw ShapeError("matrix JSON: row count mismatch");
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (entries[r].size() != cols) throw ShapeError("matrix JSON: column count mismatch in row " + std::to_string(r));
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = BigInt(entries[r][c].get<std::string>());
    }
    return m;
}

Json to_json(const AbelianGroup& g) {
    Json j;
    j["free_rank"] = g.free_rank;
    j["torsion"] = big_list(g.torsion);
    const auto order = g.order();
    j["order"] = order ? Json(order->str()) : Json("infinite");
    return j;
}

Json to_json(const GroupElement& e) { return big_list(e.coords); }

Json to_json(const StructuralReport& s) {
    Json j;
    j["sink_free"] = s.sink_free;
    j["condition_L"] = s.condition_L;
    j["cofinal"] = s.cofinal;
    j["pis"] = s.pis;
    return j;
}

Json to_json(const K0Report& r) {
    Json j;
    j["n"] = r.n;
    j["j"] = r.j;
    j["structure"] = to_json(r.structure);
    j["det"] = r.det.str();
    j["h"] = r.h.str();
    j["group"] = to_json(r.group);
    Json basis = Json::array();
    for (const auto& b : r.basis_classes) basis.push_back(to_json(b));
    j["basis_classes"] = std::move(basis);
    j["sigma_class"] = to_json(r.sigma_class);
    j["sigma_is_identity"] = r.sigma_is_identity;
    return j;
}

Json to_json(const RealizationDescriptor& r) {
    Json j;
    j["kind"] = to_string(r.kind);
    switch (r.kind) {
        case RealizationKind::Leavitt:
            j["m"] = r.m.str();
            break;
        case RealizationKind::MatrixLeavitt:
            j["d"] = r.d.str();
            j["m"] = r.m.str();
            break;
        case RealizationKind::ThreeVertex:
            j["d"] = r.d.str();
            j["q"] = r.q.str();
            break;
    }
    j["witness"] = to_json(r.witness_graph);
    return j;
}

Json to_json(const KPCertificate& c) {
    Json j;
    j["groups_isomorphic"] = c.groups_isomorphic;
    j["identity_condition"] = c.identity_condition;
    j["det_signs_compatible"] = c.det_signs_compatible;
    j["verdict"] = c.verdict;
    j["det_a"] = c.det_a.str();
    j["det_b"] = c.det_b.str();
    j["group_a"] = to_json(c.group_a);
    j["group_b"] = to_json(c.group_b);
    j["note"] = c.note;
    return j;
}

}  // namespace lpa::json_io
