#include "avoidable/corollaries.hpp"

#include "avoidable/avoidability.hpp"

#include <numeric>

namespace avoidable {

ContractedGraph contract_connected_set(const Graph& g, const VertexSet& x)
{
    if (x.empty())
        throw InvalidArgument("contract_connected_set: empty vertex set");
    for (auto v : x)
        if (!g.is_active(v))
            throw InvalidArgument("contract_connected_set: vertex " + std::to_string(v) + " is not active");

    std::vector<VertexId> parent(g.order());
    std::iota(parent.begin(), parent.end(), VertexId{0});
    auto find = [&](VertexId v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };

    auto inside = g.induced(x);
    std::vector<VertexSet> tree(g.order(), VertexSet(g.order()));
    std::size_t tree_edges = 0;
    for (auto [a, b] : inside.edges()) {
        auto ra = find(a), rb = find(b);
        if (ra == rb)
            continue;
        parent[ra] = rb;
        tree[a].insert(b);
        tree[b].insert(a);
        ++tree_edges;
    }
    if (tree_edges + 1 != x.count())
        throw InvalidArgument("contract_connected_set: G[X] is not connected");

    auto result = g;
    auto remaining = x;
    while (remaining.count() > 1) {
        for (auto leaf : remaining) {
            if (tree[leaf].count() != 1)
                continue;
            auto into = *tree[leaf].first();
            result = merge_vertices(result, into, leaf);
            tree[into].erase(leaf);
            tree[leaf].clear();
            remaining.erase(leaf);
            break;
        }
    }
    return {std::move(result), *remaining.first()};
}

SolveResult find_avoidable_outside(const Graph& g, const VertexSet& x, std::size_t k)
{
    detail::require_positive_k(k);
    auto contracted = contract_connected_set(g, x);
    return find_avoidable_path_refined(contracted.graph, k, contracted.vertex);
}

std::optional<std::pair<Path, Path>> find_two_nonadjacent_avoidable(const Graph& g, std::size_t k)
{
    std::optional<Path> first;
    for_each_induced_path(g, k, [&](std::span<const VertexId> seq) {
        if (find_induced_path(delete_closed_neighborhood(g, seq), k)) {
            first = Path{{seq.begin(), seq.end()}};
            return false;
        }
        return true;
    });
    if (!first)
        return std::nullopt;

    auto outside = [&](const Path& p) {
        auto r = find_avoidable_outside(g, VertexSet::from_range(g.order(), p.vertices), k);
        if (!r.found())
            throw std::logic_error("find_two_nonadjacent_avoidable: exterior unexpectedly P_k-free");
        return r.path();
    };
    auto second = outside(*first);
    auto again = outside(second);
    return std::make_pair(std::move(again), std::move(second));
}

Graph counterexample_graph(std::size_t k)
{
    if (k < 3)
        throw InvalidArgument("counterexample_graph: k must be at least 3");
    auto cycle_len = static_cast<VertexId>(2 * k - 1);
    std::vector<Edge> edges;
    for (VertexId i = 0; i < cycle_len; ++i)
        edges.emplace_back(i, (i + 1) % cycle_len);
    auto apex = counterexample_apex(k);
    edges.emplace_back(0, apex);
    edges.emplace_back(1, apex);
    return Graph::build(2 * k, edges);
}

DisjointReport disjoint_pair_report(const Graph& g, std::size_t k)
{
    DisjointReport report;
    auto disjoint = [&](const Path& a, const Path& b) {
        return !VertexSet::from_range(g.order(), a.vertices).intersects(VertexSet::from_range(g.order(), b.vertices));
    };
    auto first_pair = [&](const std::vector<Path>& paths) -> std::optional<std::pair<Path, Path>> {
        for (std::size_t i = 0; i < paths.size(); ++i)
            for (std::size_t j = i + 1; j < paths.size(); ++j)
                if (disjoint(paths[i], paths[j]))
                    return std::make_pair(paths[i], paths[j]);
        return std::nullopt;
    };

    report.disjoint_pk_witness = first_pair(enumerate_induced_paths(g, k));
    report.has_two_disjoint_pk = report.disjoint_pk_witness.has_value();
    report.disjoint_avoidable_witness = first_pair(enumerate_avoidable_paths(g, k));
    report.has_two_disjoint_avoidable = report.disjoint_avoidable_witness.has_value();
    return report;
}

DisjointReport verify_counterexample(std::size_t k)
{
    if (k > 6)
        throw InvalidArgument("verify_counterexample: k must be at most 6");
    return disjoint_pair_report(counterexample_graph(k), k);
}

} // namespace avoidable
