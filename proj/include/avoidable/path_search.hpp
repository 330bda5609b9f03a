#pragma once

#include "avoidable/graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace avoidable {

// Vertex sequence of an induced path. Paths produced by the search are in
// canonical orientation: front() < back() whenever size() >= 2.
struct Path {
    std::vector<VertexId> vertices;

    std::size_t size() const { return vertices.size(); }
    VertexId front() const { return vertices.front(); }
    VertexId back() const { return vertices.back(); }
    friend auto operator<=>(const Path&, const Path&) = default;
};

Path canonical(Path p);

/// Visits every induced P_k of `g` exactly once, in canonical orientation and
/// ascending lexicographic order. The visitor receives the vertex sequence and
/// returns false to stop early. Returns false iff the visitor stopped the walk.
///
/// Depth-first extension from the tip: a candidate is admissible when it is a
/// neighbour of the tip outside the closed neighbourhoods of all earlier path
/// vertices, which keeps every partial path induced.
template <typename Visitor>
bool for_each_induced_path(const Graph& g, std::size_t k, Visitor&& visit);

std::optional<Path> find_induced_path(const Graph& g, std::size_t k);
std::vector<Path> enumerate_induced_paths(const Graph& g, std::size_t k);

namespace detail {
void require_positive_k(std::size_t k);
}

template <typename Visitor>
bool for_each_induced_path(const Graph& g, std::size_t k, Visitor&& visit)
{
    detail::require_positive_k(k);
    if (k > g.active_count())
        return true;

    std::vector<VertexId> path;
    path.reserve(k);
    if (k == 1) {
        for (auto v : g.active()) {
            path.assign(1, v);
            if (!visit(std::span<const VertexId>(path)))
                return false;
        }
        return true;
    }

    // blocked[d]: closed neighbourhoods of path[0..d-1], i.e. of every vertex
    // below the tip when the path has d + 1 vertices.
    std::vector<VertexSet> blocked(k, VertexSet(g.order()));

    auto extend = [&](auto&& self) -> bool {
        auto depth = path.size();
        if (depth == k) {
            if (path.front() < path.back())
                return visit(std::span<const VertexId>(path));
            return true;
        }
        auto tip = path.back();
        auto tip_neighbors = g.neighbors(tip);
        blocked[depth] = blocked[depth - 1];
        blocked[depth] |= tip_neighbors;
        blocked[depth].insert(tip);
        for (auto c : tip_neighbors - blocked[depth - 1]) {
            // the last vertex must exceed the first for canonical orientation
            if (depth + 1 == k && c < path.front())
                continue;
            path.push_back(c);
            bool go_on = self(self);
            path.pop_back();
            if (!go_on)
                return false;
        }
        return true;
    };

    for (auto start : g.active()) {
        path.assign(1, start);
        blocked[0].clear();
        if (!extend(extend))
            return false;
    }
    return true;
}

} // namespace avoidable
