#include "avoidable/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace avoidable {

namespace {

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

} // namespace

Graph make_path(std::size_t n)
{
    std::vector<Edge> edges;
    for (VertexId i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::build(n, edges);
}

Graph make_cycle(std::size_t n)
{
    if (n < 3)
        throw InvalidArgument("make_cycle: a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i)
        edges.emplace_back(i, static_cast<VertexId>((i + 1) % n));
    return Graph::build(n, edges);
}

Graph make_complete(std::size_t n)
{
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph::build(n, edges);
}

Graph make_star(std::size_t n)
{
    std::vector<Edge> edges;
    for (VertexId i = 1; i < n; ++i)
        edges.emplace_back(0, i);
    return Graph::build(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    auto shift = static_cast<VertexId>(a.order());
    auto edges = a.edges();
    for (auto [u, v] : b.edges())
        edges.emplace_back(u + shift, v + shift);
    return Graph::build(a.order() + b.order(), edges);
}

Graph gnp(std::size_t n, double p, Seed seed)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw InvalidArgument("gnp: probability must lie in [0, 1]");
    std::mt19937_64 rng(seed.value);
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            if (unit_draw(rng) < p)
                edges.emplace_back(i, j);
    return Graph::build(n, edges);
}

Graph random_chordal(std::size_t n, Seed seed)
{
    std::mt19937_64 rng(seed.value);
    std::vector<Edge> edges;
    std::vector<VertexSet> adj(n, VertexSet(n));
    std::vector<VertexId> earlier;
    for (VertexId v = 0; v < n; ++v) {
        if (v > 0 && unit_draw(rng) >= 0.125) {
            VertexSet clique(n);
            auto seed_vertex = static_cast<VertexId>(rng() % v);
            clique.insert(seed_vertex);
            earlier.resize(v);
            std::iota(earlier.begin(), earlier.end(), VertexId{0});
            std::shuffle(earlier.begin(), earlier.end(), rng);
            for (auto w : earlier) {
                if (w == seed_vertex || !clique.is_subset_of(adj[w]))
                    continue;
                if (unit_draw(rng) < 0.5)
                    clique.insert(w);
            }
            for (auto w : clique) {
                edges.emplace_back(w, v);
                adj[w].insert(v);
                adj[v].insert(w);
            }
        }
    }
    return Graph::build(n, edges);
}

bool is_chordal(const Graph& g)
{
    auto remaining = g.active();
    while (!remaining.empty()) {
        auto view = g.induced(remaining);
        bool peeled = false;
        for (auto v : remaining) {
            auto nv = view.neighbors(v);
            bool clique = true;
            for (auto a : nv) {
                auto na = view.neighbors(a);
                na.insert(a);
                if (!nv.is_subset_of(na)) {
                    clique = false;
                    break;
                }
            }
            if (clique) {
                remaining.erase(v);
                peeled = true;
                break;
            }
        }
        if (!peeled)
            return false;
    }
    return true;
}

std::uint64_t labeled_graph_count(std::size_t n)
{
    return std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
}

Graph labeled_graph(std::size_t n, std::uint64_t mask)
{
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1)
                edges.emplace_back(i, j);
    return Graph::build(n, edges);
}

LabeledGraphs::LabeledGraphs(std::size_t n) : n_(n)
{
    if (n > 7)
        throw InvalidArgument("all_labeled_graphs: n must be at most 7");
}

} // namespace avoidable
