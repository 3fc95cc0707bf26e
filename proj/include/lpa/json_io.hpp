#ifndef LPA_JSON_IO_HPP
#define LPA_JSON_IO_HPP

#include "lpa/classifier.hpp"
#include "lpa/exact_linalg.hpp"
#include "lpa/graph.hpp"
#include "lpa/int_matrix.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace lpa::json_io {

// Ordered so that output key order is fixed.
using Json = nlohmann::ordered_json;

// {"n": <int>, "edges": [[s, t], ...]}
Json to_json(const Graph& g);
// Same text as to_json(g).dump(), written without building the JSON tree.
void write_graph(std::ostream& out, const Graph& g);
// Throws InvalidGraph with a description of the offending field.
Graph graph_from_json(const Json& j);
// Parses text; syntax errors become InvalidGraph carrying the byte offset.
Graph parse_graph(const std::string& text);

// {"rows": r, "cols": c, "entries": [["1", "-2"], ...]}
Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json to_json(const AbelianGroup& g);
Json to_json(const GroupElement& e);
Json to_json(const StructuralReport& s);
Json to_json(const K0Report& r);
Json to_json(const RealizationDescriptor& r);
Json to_json(const KPCertificate& c);

}  // namespace lpa::json_io

#endif  // LPA_JSON_IO_HPP
