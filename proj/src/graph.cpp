#include "avoidable/graph.hpp"

#include <deque>

namespace avoidable {

namespace {

void require_active(const Graph& g, VertexId v, const char* what)
{
    if (!g.is_active(v))
        throw InvalidArgument(std::string(what) + ": vertex " + std::to_string(v) + " is not active");
}

VertexSet as_set(const Graph& g, std::span<const VertexId> members)
{
    VertexSet s(g.order());
    for (auto v : members) {
        require_active(g, v, "vertex set");
        s.insert(v);
    }
    return s;
}

} // namespace

Graph::Graph(std::size_t n)
    : adjacency_(std::make_shared<const std::vector<VertexSet>>(n, VertexSet(n))), active_(VertexSet::full(n))
{
}

Graph Graph::build(std::size_t n, std::span<const Edge> edges)
{
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw InvalidArgument("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for "
                + std::to_string(n) + " vertices");
        if (u == v)
            throw InvalidArgument("self-loop at vertex " + std::to_string(u));
        adj[u].insert(v);
        adj[v].insert(u);
    }
    return Graph(std::make_shared<const std::vector<VertexSet>>(std::move(adj)), VertexSet::full(n));
}

VertexSet Graph::neighbors(VertexId v) const
{
    if (!is_active(v))
        return VertexSet(order());
    return (*adjacency_)[v] & active_;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (auto u : active_)
        for (auto v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (auto u : active_)
        twice += degree(u);
    return twice / 2;
}

Graph Graph::induced(const VertexSet& keep) const { return Graph(adjacency_, active_ & keep); }

Graph Graph::without(const VertexSet& removed) const { return Graph(adjacency_, active_ - removed); }

VertexSet closed_neighborhood(const Graph& g, const VertexSet& x)
{
    VertexSet out(g.order());
    for (auto v : x) {
        require_active(g, v, "closed_neighborhood");
        out.insert(v);
        out |= g.neighbors(v);
    }
    return out;
}

VertexSet closed_neighborhood(const Graph& g, std::span<const VertexId> x)
{
    return closed_neighborhood(g, as_set(g, x));
}

Graph delete_closed_neighborhood(const Graph& g, const VertexSet& x)
{
    return g.without(closed_neighborhood(g, x));
}

Graph delete_closed_neighborhood(const Graph& g, std::span<const VertexId> x)
{
    return g.without(closed_neighborhood(g, x));
}

Graph merge_vertices(const Graph& g, VertexId u1, VertexId u2)
{
    require_active(g, u1, "merge_vertices");
    require_active(g, u2, "merge_vertices");
    if (!g.adjacent(u1, u2))
        throw InvalidArgument("merge_vertices: " + std::to_string(u1) + " and " + std::to_string(u2)
            + " are not adjacent");

    auto adj = *g.adjacency_;
    for (auto w : adj[u2]) {
        adj[w].erase(u2);
        if (w != u1) {
            adj[w].insert(u1);
            adj[u1].insert(w);
        }
    }
    adj[u1].erase(u1);
    adj[u1].erase(u2);
    adj[u2].clear();

    auto active = g.active_;
    active.erase(u2);
    return Graph(std::make_shared<const std::vector<VertexSet>>(std::move(adj)), std::move(active));
}

bool is_induced_path(const Graph& g, std::span<const VertexId> seq)
{
    if (seq.empty())
        return false;
    VertexSet seen(g.order());
    for (auto v : seq) {
        if (!g.is_active(v) || seen.contains(v))
            return false;
        seen.insert(v);
    }
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (g.adjacent(seq[i], seq[j]) != (j == i + 1))
                return false;
    return true;
}

bool dominates(const Graph& g, const VertexSet& x, const VertexSet& y)
{
    return y.is_subset_of(closed_neighborhood(g, x));
}

std::optional<std::vector<VertexId>> connecting_path(
    const Graph& g, VertexId x, VertexId y, const VertexSet& forbidden)
{
    if (!g.is_active(x) || !g.is_active(y) || forbidden.contains(x) || forbidden.contains(y))
        return std::nullopt;

    auto allowed = g.active() - forbidden;
    constexpr auto none = static_cast<VertexId>(-1);
    std::vector<VertexId> parent(g.order(), none);
    VertexSet visited(g.order());
    visited.insert(x);
    std::deque<VertexId> queue{x};
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        if (v == y) {
            std::vector<VertexId> path{y};
            while (path.back() != x)
                path.push_back(parent[path.back()]);
            return std::vector<VertexId>(path.rbegin(), path.rend());
        }
        for (auto w : g.neighbors(v) & allowed) {
            if (visited.contains(w))
                continue;
            visited.insert(w);
            parent[w] = v;
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

bool satisfies_invariants(const Graph& g)
{
    for (auto u : g.active()) {
        auto nu = g.neighbors(u);
        if (nu.contains(u))
            return false;
        for (auto v : nu)
            if (!g.neighbors(v).contains(u))
                return false;
    }
    return true;
}

} // namespace avoidable
