#include "commands.hpp"

#include "avoidable/avoidability.hpp"
#include "avoidable/corollaries.hpp"
#include "avoidable/generators.hpp"
#include "avoidable/io.hpp"
#include "avoidable/solver.hpp"
#include "avoidable/verification.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace avoidable::cli {

using json = nlohmann::ordered_json;

namespace {

// Raised for bad flags or unreadable input; maps to exit_usage.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open input file '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<io::ParsedGraph> load_graphs(const std::string& path, const std::string& format, std::ostream& err)
{
    auto fmt = format == "edgelist" ? io::Format::edge_list
        : format == "graph6"        ? io::Format::graph6
                                    : io::Format::automatic;
    auto graphs = io::read_graphs(read_input(path), fmt);
    for (auto& g : graphs)
        for (auto& w : g.warnings)
            err << "warning: " << w << "\n";
    return graphs;
}

json to_json(const Path& p) { return p.vertices; }

json to_json(const Extension& e) { return {{"x", e.x}, {"core", e.core.vertices}, {"y", e.y}}; }

json to_json(const SolveStats& s)
{
    return {{"merges", s.merges}, {"refined_calls", s.refined_calls}, {"induced_path_calls", s.induced_path_calls},
        {"max_depth", s.max_depth}};
}

// Verdict fields merged into a document.
void put_verdict(json& doc, const Verdict& v)
{
    doc["avoidable"] = v.avoidable();
    if (v.avoidable()) {
        json list = json::array();
        for (auto& c : v.completions()) {
            auto e = to_json(c.extension);
            e["cycle"] = c.cycle.vertices;
            list.push_back(std::move(e));
        }
        doc["no_extensions"] = list.empty();
        doc["extensions"] = std::move(list);
    } else {
        doc["failing_extension"] = to_json(v.failing_extension());
    }
}

json certificate_for(const Graph& g, const Path& p)
{
    json c = json::object();
    put_verdict(c, check_avoidable(g, p));
    return c;
}

json base_document(const std::string& command, const Graph& g)
{
    return {{"command", command}, {"input_digest", io::digest(g)}, {"n", g.order()}, {"m", g.edge_count()}};
}

void require_k(long long k)
{
    if (k < 1)
        throw UsageError("--k must be at least 1");
}

struct Emitted {
    json doc;
    int code;
};

Emitted find_one(const Graph& g, long long k, std::optional<long long> refined)
{
    require_k(k);
    auto doc = base_document("find", g);
    doc["k"] = k;
    doc["refined"] = refined ? json(*refined) : json(nullptr);

    SolveResult r;
    if (refined) {
        if (*refined < 0 || static_cast<std::size_t>(*refined) >= g.order())
            throw UsageError("--refined vertex out of range");
        r = find_avoidable_path_refined(g, static_cast<std::size_t>(k), static_cast<VertexId>(*refined));
    } else {
        r = find_avoidable_path(g, static_cast<std::size_t>(k));
    }
    doc["stats"] = to_json(r.stats);
    if (auto bad = check_stat_bounds(r.stats, g.active_count()); !bad.empty())
        throw std::logic_error("solver statistics out of bounds: " + bad);

    if (r.found()) {
        doc["outcome"] = "avoidable_path";
        doc["path"] = to_json(r.path());
        doc["certificate"] = certificate_for(g, r.path());
        if (!doc["certificate"]["avoidable"].get<bool>())
            throw std::logic_error("solver returned a path that is not avoidable");
        return {std::move(doc), exit_ok};
    }
    doc["outcome"] = "pk_free";
    doc["certified_vertices"] = r.pk_free().certified.to_vector();
    doc["exterior_of"] = r.pk_free().exterior_of ? json(*r.pk_free().exterior_of) : json(nullptr);
    return {std::move(doc), exit_absent};
}

std::vector<VertexId> parse_vertex_list(const std::string& text)
{
    std::vector<VertexId> out;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            throw UsageError("--path: '" + item + "' is not a vertex id");
        }
        if (used != item.size())
            throw UsageError("--path: '" + item + "' is not a vertex id");
        out.push_back(static_cast<VertexId>(v));
    }
    if (out.empty())
        throw UsageError("--path must list at least one vertex");
    return out;
}

Emitted verify_one(const Graph& g, long long k, const std::vector<VertexId>& path)
{
    require_k(k);
    if (static_cast<std::size_t>(k) != path.size())
        throw UsageError("--path has " + std::to_string(path.size()) + " vertices but --k is " + std::to_string(k));
    for (auto v : path)
        if (v >= g.order())
            throw UsageError("--path: vertex " + std::to_string(v) + " out of range");

    auto doc = base_document("verify", g);
    doc["k"] = k;
    doc["path"] = path;
    if (!is_induced_path(g, path)) {
        doc["outcome"] = "not_induced";
        return {std::move(doc), exit_usage};
    }
    auto verdict = check_avoidable(g, Path{path});
    put_verdict(doc, verdict);
    doc["outcome"] = verdict.avoidable() ? "avoidable" : "not_avoidable";
    return {std::move(doc), verdict.avoidable() ? exit_ok : exit_absent};
}

Emitted two_nonadjacent_one(const Graph& g, long long k)
{
    require_k(k);
    auto doc = base_document("two-nonadjacent", g);
    doc["k"] = k;
    auto pair = find_two_nonadjacent_avoidable(g, static_cast<std::size_t>(k));
    if (!pair) {
        doc["outcome"] = "none";
        return {std::move(doc), exit_absent};
    }
    doc["outcome"] = "pair";
    doc["pair"] = {to_json(pair->first), to_json(pair->second)};
    doc["certificates"] = {certificate_for(g, pair->first), certificate_for(g, pair->second)};
    return {std::move(doc), exit_ok};
}

json report_to_json(const DisjointReport& r)
{
    auto pair = [](const std::optional<std::pair<Path, Path>>& p) {
        return p ? json{to_json(p->first), to_json(p->second)} : json(nullptr);
    };
    return {{"has_two_disjoint_pk", r.has_two_disjoint_pk}, {"has_two_disjoint_avoidable", r.has_two_disjoint_avoidable},
        {"disjoint_pk_witness", pair(r.disjoint_pk_witness)},
        {"disjoint_avoidable_witness", pair(r.disjoint_avoidable_witness)}};
}

// Runs `body` once per input graph; a stream of several graphs yields a
// "results" array and the largest per-graph exit code.
template <typename Body>
int per_graph(const std::string& command, const std::vector<io::ParsedGraph>& graphs, std::ostream& out, Body&& body)
{
    if (graphs.size() == 1) {
        auto [doc, code] = body(graphs.front().graph);
        out << doc.dump(2) << "\n";
        return code;
    }
    json results = json::array();
    int worst = exit_ok;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        auto [doc, code] = body(graphs[i].graph);
        doc["graph_index"] = i;
        doc["exit_code"] = code;
        results.push_back(std::move(doc));
        worst = std::max(worst, code);
    }
    out << json{{"command", command}, {"results", std::move(results)}}.dump(2) << "\n";
    return worst;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Find and certify avoidable induced paths"};
    app.require_subcommand(1);

    std::string input, format = "auto";
    long long k = 0;
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input", input, "Edge-list or graph6 file ('-' for stdin)")->required();
        sub->add_option("--format", format, "Input format")->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
    };

    auto* find = app.add_subcommand("find", "Find an avoidable induced path on k vertices");
    add_input(find);
    find->add_option("--k", k, "Path length in vertices")->required();
    std::optional<long long> refined;
    find->add_option("--refined", refined, "Search outside N[U] (refined variant)");

    auto* verify = app.add_subcommand("verify", "Check whether a given induced path is avoidable");
    add_input(verify);
    verify->add_option("--k", k, "Path length in vertices")->required();
    std::string path_text;
    verify->add_option("--path", path_text, "Comma-separated vertex ids")->required();

    auto* exhaustive = app.add_subcommand("exhaustive", "Check the solver on every small labeled graph");
    std::size_t max_n = 6, max_k = 6;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    bool check_refined = false;
    exhaustive->add_option("--max-n", max_n, "Largest vertex count (at most 7)")->required();
    exhaustive->add_option("--max-k", max_k, "Largest path length")->required();
    exhaustive->add_option("--threads", threads, "Worker threads");
    exhaustive->add_flag("--check-refined", check_refined, "Also check the refined search on every vertex");

    auto* counter = app.add_subcommand("counterexample", "Emit the graph with two disjoint P_k but no two disjoint avoidable P_k");
    counter->add_option("--k", k, "Path length (at least 3)")->required();
    bool run_verify = false;
    std::string output;
    counter->add_flag("--verify", run_verify, "Enumerate disjoint pairs (k <= 6)");
    counter->add_option("--output", output, "Also write the graph as an edge-list file");

    auto* two = app.add_subcommand("two-nonadjacent", "Find two non-adjacent avoidable P_k");
    add_input(two);
    two->add_option("--k", k, "Path length in vertices")->required();

    auto* bench = app.add_subcommand("bench", "Time one solve on a generated graph");
    std::string family;
    std::size_t bench_n = 0;
    std::optional<std::uint64_t> seed;
    double p = 0.3;
    bench->add_option("--family", family, "Graph family")->required()->check(CLI::IsMember({"gnp", "cycle", "chordal"}));
    bench->add_option("--n", bench_n, "Vertex count")->required();
    bench->add_option("--k", k, "Path length in vertices")->required();
    bench->add_option("--seed", seed, "Generator seed (required for gnp and chordal)");
    bench->add_option("--p", p, "Edge probability for gnp")->check(CLI::Range(0.0, 1.0));

    std::vector<const char*> argv;
    for (auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (find->parsed()) {
            auto graphs = load_graphs(input, format, err);
            return per_graph("find", graphs, out, [&](const Graph& g) { return find_one(g, k, refined); });
        }
        if (verify->parsed()) {
            auto vertices = parse_vertex_list(path_text);
            auto graphs = load_graphs(input, format, err);
            return per_graph("verify", graphs, out, [&](const Graph& g) { return verify_one(g, k, vertices); });
        }
        if (two->parsed()) {
            auto graphs = load_graphs(input, format, err);
            return per_graph("two-nonadjacent", graphs, out, [&](const Graph& g) { return two_nonadjacent_one(g, k); });
        }
        if (exhaustive->parsed()) {
            if (max_n > 7)
                throw UsageError("--max-n must be at most 7");
            require_k(static_cast<long long>(max_k));
            auto report = run_exhaustive({max_n, max_k, threads, check_refined});
            json rows = json::array();
            std::uint64_t graphs = 0, solves = 0;
            for (auto& r : report.rows) {
                rows.push_back({{"n", r.n}, {"graphs", r.graphs}, {"solves", r.solves},
                    {"avoidable_found", r.avoidable_found}, {"pk_free", r.pk_free}, {"refined_solves", r.refined_solves}});
                graphs += r.graphs;
                solves += r.solves;
            }
            json doc{{"command", "exhaustive"}, {"max_n", max_n}, {"max_k", max_k}, {"check_refined", check_refined},
                {"rows", rows}, {"total_graphs", graphs}, {"total_solves", solves},
                {"violation_count", report.violations.size()}, {"violations", report.violations}};
            out << doc.dump(2) << "\n";
            return report.ok() ? exit_ok : exit_failure;
        }
        if (counter->parsed()) {
            if (k < 3)
                throw UsageError("--k must be at least 3");
            if (run_verify && k > 6)
                throw UsageError("--verify supports k <= 6");
            auto g = counterexample_graph(static_cast<std::size_t>(k));
            auto doc = base_document("counterexample", g);
            doc["k"] = k;
            doc["apex"] = counterexample_apex(static_cast<std::size_t>(k));
            json edges = json::array();
            for (auto [u, v] : g.edges())
                edges.push_back({u, v});
            doc["edges"] = std::move(edges);
            doc["graph6"] = io::encode_graph6(g);
            if (!output.empty()) {
                std::ofstream file(output, std::ios::binary);
                if (!file)
                    throw UsageError("cannot write '" + output + "'");
                file << io::serialize_edge_list(g);
            }
            int code = exit_ok;
            if (run_verify) {
                auto report = verify_counterexample(static_cast<std::size_t>(k));
                doc["report"] = report_to_json(report);
                doc["outcome"] = "report";
                if (!report.has_two_disjoint_pk || report.has_two_disjoint_avoidable)
                    code = exit_failure;
            }
            out << doc.dump(2) << "\n";
            return code;
        }
        if (bench->parsed()) {
            require_k(k);
            auto fam = family == "gnp" ? BenchFamily::gnp : family == "cycle" ? BenchFamily::cycle : BenchFamily::chordal;
            if (fam != BenchFamily::cycle && !seed)
                throw UsageError("--seed is required for the " + family + " family");
            auto run = run_bench(fam, bench_n, static_cast<std::size_t>(k), seed.value_or(0), p);
            auto bad = check_stat_bounds(run.result.stats, run.graph.active_count());
            auto doc = base_document("bench", run.graph);
            doc["family"] = family;
            doc["k"] = k;
            doc["seed"] = seed ? json(*seed) : json(nullptr);
            if (fam == BenchFamily::gnp)
                doc["p"] = p;
            doc["wall_ms"] = run.wall_ms;
            doc["stats"] = to_json(run.result.stats);
            doc["bounds_ok"] = bad.empty();
            if (run.result.found()) {
                doc["outcome"] = "avoidable_path";
                doc["path"] = to_json(run.result.path());
            } else {
                doc["outcome"] = "pk_free";
            }
            out << doc.dump(2) << "\n";
            if (!bad.empty()) {
                err << "error: " << bad << "\n";
                return exit_failure;
            }
            return exit_ok;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}

namespace {

void check_certificate(
    const nlohmann::json& cert, const Graph& g, const Path& p, const std::string& where, std::vector<std::string>& problems)
{
    if (cert.value("avoidable", false)) {
        auto expected = enumerate_extensions(g, p).size();
        if (cert.at("extensions").size() != expected)
            problems.push_back(where + ": certificate lists " + std::to_string(cert.at("extensions").size())
                + " extensions, graph has " + std::to_string(expected));
        for (auto& e : cert.at("extensions")) {
            Extension ext{e.at("x").get<VertexId>(), Path{e.at("core").get<std::vector<VertexId>>()},
                e.at("y").get<VertexId>()};
            auto cycle = e.at("cycle").get<std::vector<VertexId>>();
            if (ext.core != p || !is_induced_path(g, ext.sequence()))
                problems.push_back(where + ": listed extension is not an extension of the path");
            else if (!is_induced_cycle(g, cycle) || !cycle_contains_arc(cycle, ext.sequence()))
                problems.push_back(where + ": cycle does not complete its extension");
        }
    } else {
        auto& e = cert.at("failing_extension");
        Extension ext{e.at("x").get<VertexId>(), Path{e.at("core").get<std::vector<VertexId>>()},
            e.at("y").get<VertexId>()};
        if (!is_induced_path(g, ext.sequence()))
            problems.push_back(where + ": failing extension is not induced");
        else if (!is_failing(g, ext))
            problems.push_back(where + ": claimed failing extension lies on an induced cycle");
    }
}

} // namespace

namespace {

void recheck_into(const nlohmann::json& doc, const Graph& g, std::vector<std::string>& problems)
{
    if (doc.contains("input_digest") && doc.at("input_digest") != io::digest(g))
        problems.push_back("input digest mismatch");
    auto outcome = doc.value("outcome", std::string{});
    auto k = doc.value("k", 0ull);

    auto check_path = [&](const nlohmann::json& j, const std::string& where) -> std::optional<Path> {
        Path p{j.get<std::vector<VertexId>>()};
        for (auto v : p.vertices)
            if (v >= g.order()) {
                problems.push_back(where + ": vertex out of range");
                return std::nullopt;
            }
        if (p.size() != k || !is_induced_path(g, p.vertices)) {
            problems.push_back(where + ": not an induced P_k");
            return std::nullopt;
        }
        return p;
    };

    if (outcome == "avoidable_path") {
        if (auto p = check_path(doc.at("path"), "path")) {
            if (doc.contains("certificate"))
                check_certificate(doc.at("certificate"), g, *p, "path", problems);
            if (doc.contains("refined") && !doc.at("refined").is_null()) {
                auto u = doc.at("refined").get<VertexId>();
                if (closed_neighborhood(g, VertexSet(g.order(), {u})).intersects(VertexSet::from_range(g.order(), p->vertices)))
                    problems.push_back("path meets N[u] of the refined vertex");
            }
        }
    } else if (outcome == "pk_free") {
        if (doc.contains("certified_vertices")) {
            auto view = g.induced(VertexSet::from_range(g.order(), doc.at("certified_vertices").get<std::vector<VertexId>>()));
            if (find_induced_path(view, k))
                problems.push_back("certified graph contains an induced P_k");
        }
    } else if (outcome == "avoidable" || outcome == "not_avoidable") {
        if (auto p = check_path(doc.at("path"), "path")) {
            check_certificate(doc, g, *p, "path", problems);
            if ((outcome == "avoidable") != doc.value("avoidable", false))
                problems.push_back("outcome and avoidable flag disagree");
        }
    } else if (outcome == "pair") {
        auto a = check_path(doc.at("pair").at(0), "first");
        auto b = check_path(doc.at("pair").at(1), "second");
        if (a && b) {
            auto sa = VertexSet::from_range(g.order(), a->vertices);
            if (closed_neighborhood(g, sa).intersects(VertexSet::from_range(g.order(), b->vertices)))
                problems.push_back("pair members touch");
            check_certificate(doc.at("certificates").at(0), g, *a, "first", problems);
            check_certificate(doc.at("certificates").at(1), g, *b, "second", problems);
            if (!doc.at("certificates").at(0).value("avoidable", false)
                || !doc.at("certificates").at(1).value("avoidable", false))
                problems.push_back("pair member not certified avoidable");
        }
    } else if (outcome == "report") {
        auto& r = doc.at("report");
        for (auto key : {"disjoint_pk_witness", "disjoint_avoidable_witness"}) {
            if (r.at(key).is_null())
                continue;
            auto a = check_path(r.at(key).at(0), key);
            auto b = check_path(r.at(key).at(1), key);
            if (a && b
                && VertexSet::from_range(g.order(), a->vertices).intersects(VertexSet::from_range(g.order(), b->vertices)))
                problems.push_back(std::string(key) + ": paths share a vertex");
        }
    }
}

} // namespace

std::vector<std::string> recheck_document(const nlohmann::json& doc, const Graph& g)
{
    std::vector<std::string> problems;
    try {
        recheck_into(doc, g, problems);
    } catch (const std::exception& e) {
        // missing keys, wrong types, ids outside the graph
        problems.push_back(std::string("malformed document: ") + e.what());
    }
    return problems;
}

} // namespace avoidable::cli
