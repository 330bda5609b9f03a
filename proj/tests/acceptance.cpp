// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include "avoidable/avoidability.hpp"
#include "avoidable/corollaries.hpp"
#include "avoidable/generators.hpp"
#include "avoidable/solver.hpp"
#include "avoidable/verification.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>

using namespace avoidable;

namespace {

struct Criterion {
    std::string id;
    std::string title;
    std::function<std::string()> run; // empty string on success, otherwise the first failure
};

// Every solve made by the suite goes through here so the structural bounds
// are checked on all of them.
std::size_t bound_violations = 0;
std::size_t solves_checked = 0;

SolveResult checked(SolveResult r, std::size_t n)
{
    ++solves_checked;
    if (!check_stat_bounds(r.stats, n).empty())
        ++bound_violations;
    return r;
}

std::string describe(std::size_t n, std::uint64_t mask, std::size_t k, const std::string& what)
{
    std::ostringstream s;
    s << "n=" << n << " mask=" << mask << " k=" << k << ": " << what;
    return s.str();
}

std::string theorem_exhaustive()
{
    auto threads = std::max(1u, std::thread::hardware_concurrency());
    auto report = run_exhaustive({6, 6, threads, false});
    for (auto& row : report.rows)
        if (row.graphs != labeled_graph_count(row.n))
            return "n=" + std::to_string(row.n) + ": visited " + std::to_string(row.graphs) + " graphs";
    if (!report.ok())
        return std::to_string(report.violations.size()) + " violations, first: " + report.violations.front();
    return {};
}

std::string refined_property()
{
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
            auto g = labeled_graph(n, mask);
            for (std::size_t k = 1; k <= n; ++k)
                for (VertexId u = 0; u < n; ++u) {
                    auto r = checked(find_avoidable_path_refined(g, k, u), n);
                    auto closed = closed_neighborhood(g, VertexSet(n, {u}));
                    if (r.found()) {
                        auto& p = r.path();
                        if (p.size() != k || !is_induced_path(g, p.vertices))
                            return describe(n, mask, k, "u=" + std::to_string(u) + " result is not an induced P_k");
                        if (closed.intersects(VertexSet::from_range(n, p.vertices)))
                            return describe(n, mask, k, "u=" + std::to_string(u) + " result meets N[u]");
                        if (!brute_force_is_avoidable(g, p))
                            return describe(n, mask, k, "u=" + std::to_string(u) + " result not avoidable");
                    } else if (!oracle::induced_paths(g.without(closed), k).empty()) {
                        return describe(n, mask, k, "u=" + std::to_string(u) + " G-N[u] wrongly certified P_k-free");
                    }
                }
        }
    return {};
}

std::string compare_failing(const Graph& g, const std::string& label)
{
    for (std::size_t k = 1; k + 2 <= g.active_count(); ++k)
        for (auto& p : enumerate_induced_paths(g, k))
            for (auto& e : enumerate_extensions(g, p))
                if (is_failing(g, e) != brute_force_is_failing(g, e))
                    return label + " k=" + std::to_string(k) + ": reduction and oracle disagree";
    return {};
}

std::string failing_reduction()
{
    for (std::uint64_t mask = 0; mask < labeled_graph_count(5); ++mask)
        for (std::size_t n = 1; n <= 5; ++n) {
            if (mask >= labeled_graph_count(n))
                continue;
            if (auto bad = compare_failing(labeled_graph(n, mask), "n=" + std::to_string(n) + " mask=" + std::to_string(mask));
                !bad.empty())
                return bad;
        }
    const double probabilities[] = {0.2, 0.5, 0.8};
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        auto p = probabilities[seed % 3];
        if (auto bad = compare_failing(gnp(10, p, Seed{seed}), "gnp(10," + std::to_string(p) + ") seed=" + std::to_string(seed));
            !bad.empty())
            return bad;
    }
    return {};
}

std::string counterexample_family()
{
    for (std::size_t k = 3; k <= 5; ++k) {
        auto r = verify_counterexample(k);
        if (!r.has_two_disjoint_pk)
            return "k=" + std::to_string(k) + ": no two disjoint P_k";
        if (r.has_two_disjoint_avoidable)
            return "k=" + std::to_string(k) + ": found two disjoint avoidable P_k";
    }
    return {};
}

std::string chordal_specialization()
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto n = 5 + seed % 26;
        auto g = random_chordal(n, Seed{seed});
        if (!is_chordal(g))
            return "seed=" + std::to_string(seed) + ": generator output not chordal";
        for (std::size_t k = 1; k <= 4; ++k) {
            auto r = checked(solve_with_stats(g, k), n);
            if (!r.found()) {
                if (find_induced_path(g, k))
                    return "seed=" + std::to_string(seed) + " k=" + std::to_string(k) + ": wrongly P_k-free";
                continue;
            }
            auto& p = r.path();
            if (!enumerate_extensions(g, p).empty())
                return "seed=" + std::to_string(seed) + " k=" + std::to_string(k) + ": returned path has an extension";
            if (k == 1) {
                auto nv = g.neighbors(p.front());
                for (auto a : nv)
                    for (auto b : nv)
                        if (a != b && !g.adjacent(a, b))
                            return "seed=" + std::to_string(seed) + ": returned vertex is not simplicial";
            }
        }
    }
    return {};
}

std::string two_nonadjacent()
{
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
            auto g = labeled_graph(n, mask);
            for (std::size_t k = 1; k <= 3; ++k) {
                auto pair = find_two_nonadjacent_avoidable(g, k);
                if (pair.has_value() != oracle::has_two_nonadjacent(g, k))
                    return describe(n, mask, k, "presence disagrees with brute force");
                if (!pair)
                    continue;
                auto& [a, b] = *pair;
                if (!is_induced_path(g, a.vertices) || !is_induced_path(g, b.vertices) || a.size() != k || b.size() != k)
                    return describe(n, mask, k, "pair member is not an induced P_k");
                auto closed = closed_neighborhood(g, VertexSet::from_range(n, a.vertices));
                if (closed.intersects(VertexSet::from_range(n, b.vertices)))
                    return describe(n, mask, k, "pair members are adjacent");
                if (!brute_force_is_avoidable(g, a) || !brute_force_is_avoidable(g, b))
                    return describe(n, mask, k, "pair member not avoidable");
            }
        }
    return {};
}

std::string complexity_accounting()
{
    for (std::size_t n : {20, 40, 80}) {
        auto run = run_bench(BenchFamily::cycle, n, 3, 0);
        checked(run.result, n);
        std::printf("       cycle n=%-3zu k=3: induced_path_calls=%zu refined_calls=%zu merges=%zu max_depth=%zu "
                    "(%.2f ms)\n",
            n, run.result.stats.induced_path_calls, run.result.stats.refined_calls, run.result.stats.merges,
            run.result.stats.max_depth, run.wall_ms);
        if (!run.result.found())
            return "cycle n=" + std::to_string(n) + ": no path found";
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed)
        checked(solve_with_stats(gnp(8, 0.3, Seed{seed}), 3), 8);
    std::printf("       structural bounds checked on %zu solves in this suite\n", solves_checked);
    if (bound_violations)
        return std::to_string(bound_violations) + " solves broke merges <= n-1 or refined_calls <= n";
    return {};
}

} // namespace

int main()
{
    std::vector<Criterion> criteria{
        {"AC1", "theorem on all labeled graphs n<=6, k<=n", theorem_exhaustive},
        {"AC2", "refined property on all labeled graphs n<=5, all u, k<=n", refined_property},
        {"AC3", "failing-test reduction equals cycle oracle (n<=5 exhaustive, 1000 G(10,p))", failing_reduction},
        {"AC4", "counterexample family k=3,4,5: disjoint P_k yes, disjoint avoidable no", counterexample_family},
        {"AC5", "chordal graphs: returned paths are simplicial (200 seeds, k<=4)", chordal_specialization},
        {"AC6", "two non-adjacent avoidable P_k on all graphs n<=5, k<=3", two_nonadjacent},
        {"AC7", "complexity accounting: structural bounds, cycle bench", complexity_accounting},
    };

    int failures = 0;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string problem;
        try {
            problem = c.run();
        } catch (const std::exception& e) {
            problem = std::string("exception: ") + e.what();
        }
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (problem.empty()) {
            std::printf("[PASS] %s %s (%.1fs)\n", c.id.c_str(), c.title.c_str(), secs);
        } else {
            ++failures;
            std::printf("[FAIL] %s %s (%.1fs): %s\n", c.id.c_str(), c.title.c_str(), secs, problem.c_str());
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
