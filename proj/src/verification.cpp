#include "avoidable/verification.hpp"

#include "avoidable/avoidability.hpp"
#include "avoidable/generators.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

namespace avoidable {

std::vector<Path> brute_force_induced_paths(const Graph& g, std::size_t k)
{
    detail::require_positive_k(k);
    auto verts = g.active().to_vector();
    auto n = verts.size();
    if (n > 63)
        throw InvalidArgument("brute_force_induced_paths: graph too large for the oracle");
    std::vector<Path> out;
    if (k > n)
        return out;

    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g.adjacent(verts[i], verts[j]))
                adj[i] |= std::uint64_t{1} << j;

    // Gosper's hack over k-subsets of n local indices.
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (s < limit) {
        // G[S] is a P_k iff it is connected with k-1 edges and maximum degree <= 2,
        // i.e. a tree that is a path.
        int degree_sum = 0;
        int start = -1;
        bool ok = true;
        for (auto t = s; t && ok; t &= t - 1) {
            int i = std::countr_zero(t);
            int d = std::popcount(adj[i] & s);
            ok = d <= 2 && (d > 0 || k == 1);
            degree_sum += d;
            if (d <= 1 && start < 0)
                start = i;
        }
        if (ok && degree_sum == 2 * static_cast<int>(k - 1) && start >= 0) {
            Path p;
            std::uint64_t seen = 0;
            for (int cur = start; cur >= 0;) {
                p.vertices.push_back(verts[cur]);
                seen |= std::uint64_t{1} << cur;
                auto next = adj[cur] & s & ~seen;
                cur = next ? std::countr_zero(next) : -1;
            }
            if (p.size() == k)
                out.push_back(canonical(std::move(p)));
        }
        if (s == 0)
            break;
        auto c = s & (~s + 1);
        auto r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string check_stat_bounds(const SolveStats& stats, std::size_t n)
{
    std::ostringstream msg;
    if (n > 0 && stats.merges > n - 1)
        msg << "merges " << stats.merges << " > n-1 = " << n - 1 << "; ";
    if (stats.refined_calls > n)
        msg << "refined_calls " << stats.refined_calls << " > n = " << n << "; ";
    if (stats.max_depth > n)
        msg << "max_depth " << stats.max_depth << " > n = " << n << "; ";
    return msg.str();
}

namespace {

struct WorkerOutput {
    std::vector<ExhaustiveRow> rows;
    std::vector<std::string> violations;
};

void check_graph(std::size_t n, std::uint64_t mask, const ExhaustiveOptions& opt, ExhaustiveRow& row,
    std::vector<std::string>& violations)
{
    auto g = labeled_graph(n, mask);
    auto report = [&](std::size_t k, const std::string& what) {
        std::ostringstream s;
        s << "n=" << n << " mask=" << mask << " k=" << k << ": " << what;
        violations.push_back(s.str());
    };

    ++row.graphs;
    for (std::size_t k = 1; k <= std::min(n, opt.max_k); ++k) {
        auto r = solve_with_stats(g, k);
        ++row.solves;
        if (auto bad = check_stat_bounds(r.stats, n); !bad.empty())
            report(k, "stat bounds violated: " + bad);
        if (r.found()) {
            ++row.avoidable_found;
            auto& p = r.path();
            if (p.size() != k || !is_induced_path(g, p.vertices))
                report(k, "returned sequence is not an induced P_k");
            else if (!brute_force_is_avoidable(g, p))
                report(k, "returned path is not avoidable");
        } else {
            ++row.pk_free;
            if (!brute_force_induced_paths(g, k).empty())
                report(k, "claimed P_k-free but an induced P_k exists");
        }

        if (!opt.check_refined)
            continue;
        for (VertexId u = 0; u < n; ++u) {
            auto rr = find_avoidable_path_refined(g, k, u);
            ++row.refined_solves;
            auto closed = closed_neighborhood(g, VertexSet(g.order(), {u}));
            if (auto bad = check_stat_bounds(rr.stats, n); !bad.empty())
                report(k, "refined u=" + std::to_string(u) + " stat bounds violated: " + bad);
            if (rr.found()) {
                auto& p = rr.path();
                if (p.size() != k || !is_induced_path(g, p.vertices))
                    report(k, "refined u=" + std::to_string(u) + ": not an induced P_k");
                else if (VertexSet::from_range(g.order(), p.vertices).intersects(closed))
                    report(k, "refined u=" + std::to_string(u) + ": path meets N[u]");
                else if (!brute_force_is_avoidable(g, p))
                    report(k, "refined u=" + std::to_string(u) + ": path not avoidable");
            } else if (!brute_force_induced_paths(g.without(closed), k).empty()) {
                report(k, "refined u=" + std::to_string(u) + ": claimed G-N[u] P_k-free");
            }
        }
    }
}

} // namespace

ExhaustiveReport run_exhaustive(const ExhaustiveOptions& opt)
{
    if (opt.max_n > 7)
        throw InvalidArgument("exhaustive verification supports at most 7 vertices");
    if (opt.max_k == 0)
        throw InvalidArgument("path length k must be at least 1");

    constexpr std::uint64_t chunk = 256;
    auto threads = std::max(1u, opt.threads);
    std::vector<WorkerOutput> outputs(threads);

    for (std::size_t n = 0; n <= opt.max_n; ++n) {
        auto total = labeled_graph_count(n);
        std::atomic<std::uint64_t> next{0};
        auto work = [&](WorkerOutput& out) {
            out.rows.push_back(ExhaustiveRow{n});
            auto& row = out.rows.back();
            for (auto begin = next.fetch_add(chunk); begin < total; begin = next.fetch_add(chunk))
                for (auto mask = begin; mask < std::min(total, begin + chunk); ++mask)
                    check_graph(n, mask, opt, row, out.violations);
        };
        if (threads == 1) {
            work(outputs[0]);
        } else {
            std::vector<std::jthread> pool;
            for (auto& out : outputs)
                pool.emplace_back([&] { work(out); });
        }
    }

    ExhaustiveReport report;
    for (std::size_t n = 0; n <= opt.max_n; ++n) {
        ExhaustiveRow sum{n};
        for (auto& out : outputs)
            for (auto& row : out.rows)
                if (row.n == n) {
                    sum.graphs += row.graphs;
                    sum.solves += row.solves;
                    sum.avoidable_found += row.avoidable_found;
                    sum.pk_free += row.pk_free;
                    sum.refined_solves += row.refined_solves;
                }
        report.rows.push_back(sum);
    }
    for (auto& out : outputs)
        report.violations.insert(report.violations.end(), out.violations.begin(), out.violations.end());
    std::sort(report.violations.begin(), report.violations.end());
    return report;
}

BenchRun run_bench(BenchFamily family, std::size_t n, std::size_t k, std::uint64_t seed, double p)
{
    Graph g;
    switch (family) {
    case BenchFamily::gnp:
        g = gnp(n, p, Seed{seed});
        break;
    case BenchFamily::cycle:
        g = make_cycle(n);
        break;
    case BenchFamily::chordal:
        g = random_chordal(n, Seed{seed});
        break;
    }
    auto start = std::chrono::steady_clock::now();
    auto result = solve_with_stats(g, k);
    auto stop = std::chrono::steady_clock::now();
    return {std::move(g), std::move(result), std::chrono::duration<double, std::milli>(stop - start).count()};
}

} // namespace avoidable
