#include "lpa/cli.hpp"

#include "lpa/classifier.hpp"
#include "lpa/error.hpp"
#include "lpa/json_io.hpp"
#include "lpa/monoid_oracle.hpp"
#include "lpa/sequences.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

namespace lpa::cli {

namespace {

using json_io::Json;

// Evaluates fn(first..last) on a few worker threads; results are indexed by n.
std::vector<SuiteResult> sweep(std::size_t first, std::size_t last,
                               const std::function<SuiteResult(std::size_t)>& fn) {
    if (last < first) return {};
    const std::size_t count = last - first + 1;
    std::vector<SuiteResult> results(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                results[i] = fn(first + i);
            } catch (const std::exception& e) {
                results[i] = SuiteResult{false, Json{{"error", e.what()}}};
            }
        }
    };
    const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < std::min(threads, count); ++t) pool.emplace_back(worker);
    worker();
    return results;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidGraph("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path) { return json_io::parse_graph(read_file(path)); }

Json k0_summary(const K0Report& r) {
    Json j;
    j["n"] = r.n;
    j["j"] = r.j;
    j["det"] = r.det.str();
    j["group"] = json_io::to_json(r.group);
    return j;
}

Json cmd_cayley(std::size_t n, std::size_t jj, const std::string& emit) {
    Json out;
    out["n"] = n;
    out["j"] = jj;
    if (emit == "matrix") {
        const Graph g = cayley_graph(n, jj);
        out["incidence"] = json_io::to_json(incidence_matrix(g));
        out["relation"] = json_io::to_json(k0_relation_matrix(g));
    } else if (emit == "det") {
        out["det"] = determinant(k0_relation_matrix(cayley_graph(n, jj))).str();
    } else if (emit == "k0") {
        out = k0_summary(k0_report(n, jj));
    } else {
        out = json_io::to_json(k0_report(n, jj));
    }
    return out;
}

Json cmd_seq(const std::string& kind, std::optional<std::size_t> k, std::size_t max) {
    Json values = Json::array();
    if (kind == "fib") {
        const auto f = fibonacci_table(max);
        for (std::size_t i = 1; i <= max; ++i) values.push_back(f[i].str());
    } else if (kind == "h2") {
        const auto h = h2_table(max);
        for (std::size_t i = 1; i <= max; ++i) values.push_back(h[i].str());
    } else if (kind == "haselgrove") {
        if (!k) throw InvalidParameter("seq --kind haselgrove requires --k");
        for (std::size_t i = 1; i <= max; ++i) values.push_back(haselgrove(*k, i).str());
    } else {
        for (std::size_t i = 1; i <= max; ++i) values.push_back(d_gcd(i).str());
    }
    Json out;
    out["kind"] = kind;
    if (kind == "haselgrove") out["k"] = *k;
    out["start"] = 1;
    out["max"] = max;
    out["values"] = std::move(values);
    return out;
}

Json cmd_monoid(const std::string& path, std::optional<std::size_t> cap) {
    const Graph g = load_graph(path);
    const std::size_t c = cap.value_or(default_cap(g.vertex_count()));
    const MonoidTable t = enumerate_classes(g, c);
    Json out;
    out["n"] = g.vertex_count();
    out["cap"] = c;
    out["reachable_classes"] = class_count_reachable(t);
    if (2 * g.vertex_count() <= c) {
        out["identity_check"] = identity_class_check(g, t);
    } else {
        out["identity_check"] = nullptr;
    }
    return out;
}

SuiteResult suite_theorem_c2(std::size_t n) {
    return {verify_theorem_c2(n) && verify_cyclic_criterion(n), nullptr};
}

SuiteResult suite_identities(std::size_t n) {
    const IdentityReport r = identity_suite(n);
    bool lemma = true;
    const BigInt d = d_gcd(n);
    for (std::size_t j = 0; j + 2 <= n && lemma; ++j) lemma = gcd_reduction(n, j) == d;
    Json detail;
    detail["identities"] = r.all();
    detail["gcd_reduction"] = lemma;
    return {r.all() && lemma, detail};
}

SuiteResult suite_gcd(std::size_t n) {
    const BigInt d = d_gcd(n);
    const BigInt h2 = h2_recursive(n);
    bool ok = d == d_closed(n) && h2 % (d * d) == 0;
    if (n % 4 == 0) ok = ok && h2 == 5 * d * d;
    if (n % 4 == 2) ok = ok && h2 == d * d;
    const GcdInvariants g = gcd_invariants(n);
    ok = ok && g.a == (n % 6 == 0 ? 2 : 1);
    if (n % 2 == 0) ok = ok && g.b && *g.b == 1;
    Json detail;
    detail["d"] = d.str();
    return {ok, detail};
}

SuiteResult suite_steps(std::size_t n) {
    const StepsReport s = verify_steps(n);
    Json detail;
    detail["step1"] = s.step1;
    detail["lemma_x"] = s.lemma_x;
    detail["step2"] = s.step2;
    detail["branch"] = s.uses_vn ? "x,v_n" : "x,v_1";
    return {s.all(), detail};
}

SuiteResult suite_kp(std::size_t n) {
    const BigInt d = d_gcd(n);
    const BigInt q = exact_div(h2_recursive(n), d, "H2(n)/d(n)");
    const KPCertificate c = kp_certificate(
        cayley_graph(n, 2), en_graph(d.convert_to<std::size_t>(), q.convert_to<std::size_t>()));
    return {c.verdict, nullptr};
}

SuiteResult suite_monoid_cross(std::size_t n) {
    bool ok = true;
    Json per_j = Json::array();
    for (std::size_t jj = 0; jj < n; ++jj) {
        const MonoidCrossReport r = monoid_cross_check(cayley_graph(n, jj), default_cap(n));
        const bool pass = r.sound && r.zero_isolated && (!r.group_order || r.count_matches) &&
                          r.identity_check.value_or(true);
        ok = ok && pass;
        Json e;
        e["j"] = jj;
        e["reachable_classes"] = r.reachable_classes;
        e["pass"] = pass;
        per_j.push_back(std::move(e));
    }
    Json detail;
    detail["by_j"] = std::move(per_j);
    return {ok, detail};
}

int cmd_verify(const std::string& suite, std::size_t max, std::ostream& out, std::ostream& err) {
    std::function<SuiteResult(std::size_t)> fn;
    std::size_t first = 1;
    if (suite == "theorem-c2") {
        fn = suite_theorem_c2;
    } else if (suite == "identities") {
        fn = suite_identities;
        first = 2;
    } else if (suite == "gcd") {
        fn = suite_gcd;
    } else if (suite == "steps") {
        fn = suite_steps;
        first = 3;
    } else if (suite == "kp") {
        fn = suite_kp;
        first = 3;
    } else {
        if (max > 6) throw InvalidParameter("monoid-cross supports --max <= 6 (the vector budget)");
        fn = suite_monoid_cross;
    }

    return write_verify_report(suite, max, first, sweep(first, max, fn), out, err);
}

// Witness graphs can carry millions of loops, so the edge list is streamed
// rather than built as a JSON tree.
void cmd_realize(std::size_t n, std::size_t jj, std::ostream& os) {
    const RealizationDescriptor r = realization(n, jj);
    Json head;
    head["n"] = n;
    head["j"] = jj;
    const Json fields = json_io::to_json(RealizationDescriptor{r.kind, r.m, r.d, r.q, {}});
    for (const auto& [key, value] : fields.items())
        if (key != "witness") head[key] = value;
    std::string text = head.dump();
    text.pop_back();  // reopen the object
    os << text << ",\"witness\":";
    json_io::write_graph(os, r.witness_graph);
    os << "}\n";
}

}  // namespace

int write_verify_report(const std::string& suite, std::size_t max, std::size_t first,
                        const std::vector<SuiteResult>& results, std::ostream& out, std::ostream& err) {
    Json list = Json::array();
    std::optional<std::size_t> first_failure;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const std::size_t n = first + i;
        Json e;
        e["n"] = n;
        e["pass"] = results[i].pass;
        if (!results[i].detail.is_null())
            for (const auto& [key, value] : results[i].detail.items()) e[key] = value;
        list.push_back(std::move(e));
        if (!results[i].pass && !first_failure) first_failure = n;
    }
    Json doc;
    doc["suite"] = suite;
    doc["max"] = max;
    doc["results"] = std::move(list);
    doc["all_pass"] = !first_failure.has_value();
    doc["first_failure"] = first_failure ? Json(*first_failure) : Json(nullptr);
    out << doc.dump() << '\n';
    if (first_failure) {
        err << "verify " << suite << ": first failure at n = " << *first_failure << '\n';
        return kVerificationFailure;
    }
    return kSuccess;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"K-theory of Leavitt path algebras of finite graphs", "lpa_k0"};
    app.require_subcommand(1, 1);

    std::size_t n = 0;
    std::size_t j = 0;
    std::size_t max = 0;
    std::optional<std::size_t> k;
    std::optional<std::size_t> cap;
    std::string emit;
    std::string kind;
    std::string suite;
    std::string graph_path;

    auto* cayley = app.add_subcommand("cayley", "Cayley graph C_n^j: matrix, determinant, K0");
    cayley->add_option("--n", n, "vertex count")->required()->check(CLI::PositiveNumber);
    cayley->add_option("--j", j, "second generator (reduced mod n)")->required()->check(CLI::NonNegativeNumber);
    cayley->add_option("--emit", emit, "what to print")
        ->required()
        ->check(CLI::IsMember({"matrix", "det", "k0", "report"}));

    auto* k0 = app.add_subcommand("k0", "K0 report for a graph file");
    k0->add_option("--graph", graph_path, "graph JSON file")->required();

    auto* seq = app.add_subcommand("seq", "integer sequences, indices 1..max");
    seq->add_option("--kind", kind)->required()->check(CLI::IsMember({"fib", "h2", "haselgrove", "d"}));
    seq->add_option("--k", k, "Haselgrove index")->check(CLI::NonNegativeNumber);
    seq->add_option("--max", max)->required()->check(CLI::PositiveNumber);

    auto* monoid = app.add_subcommand("monoid", "bounded graph-monoid closure");
    monoid->add_option("--graph", graph_path, "graph JSON file")->required();
    monoid->add_option("--cap", cap, "coordinate-sum cap")->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand("verify", "sweep a verification suite over n");
    verify->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"theorem-c2", "identities", "gcd", "steps", "kp", "monoid-cross"}));
    verify->add_option("--max", max)->required()->check(CLI::PositiveNumber);

    auto* realize = app.add_subcommand("realize", "realization graph for C_n^j, j in {0,1,2}");
    realize->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    realize->add_option("--j", j)->required()->check(CLI::NonNegativeNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            err << app.help();
            return kSuccess;
        }
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    }

    try {
        if (*cayley) {
            out << cmd_cayley(n, j, emit).dump() << '\n';
        } else if (*k0) {
            Json doc = json_io::to_json(k0_report(load_graph(graph_path)));
            doc.erase("j");
            out << doc.dump() << '\n';
        } else if (*seq) {
            out << cmd_seq(kind, k, max).dump() << '\n';
        } else if (*monoid) {
            out << cmd_monoid(graph_path, cap).dump() << '\n';
        } else if (*verify) {
            return cmd_verify(suite, max, out, err);
        } else if (*realize) {
            cmd_realize(n, j, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kUsageError;
    }
    return kSuccess;
}

}  // namespace lpa::cli
