#pragma once

#include "avoidable/vertex_set.hpp"

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace avoidable {

// Thrown on any precondition violation of the public API.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<VertexId, VertexId>;

/// Finite simple loopless graph over ids 0..n-1.
///
/// The edge structure is immutable and shared between copies. Each Graph value
/// carries an active mask; removing vertices yields a view with the same ids.
/// Every query ignores inactive vertices and the edges incident to them.
class Graph {
public:
    Graph() : Graph(0) { }
    explicit Graph(std::size_t n);

    // Rejects out-of-range endpoints and self-loops; duplicates collapse.
    static Graph build(std::size_t n, std::span<const Edge> edges);
    static Graph build(std::size_t n, std::initializer_list<Edge> edges)
    {
        return build(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    // Size of the id universe, including inactive ids.
    std::size_t order() const { return active_.universe(); }
    std::size_t active_count() const { return active_.count(); }
    const VertexSet& active() const { return active_; }
    bool is_active(VertexId v) const { return active_.contains(v); }

    bool adjacent(VertexId u, VertexId v) const
    {
        return is_active(u) && is_active(v) && (*adjacency_)[u].contains(v);
    }
    // Active neighbours of an active vertex.
    VertexSet neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).count(); }

    // Active edges as (u, v) with u < v, ascending.
    std::vector<Edge> edges() const;
    std::size_t edge_count() const;

    // View restricted to active() ∩ keep.
    Graph induced(const VertexSet& keep) const;
    // View restricted to active() \ removed.
    Graph without(const VertexSet& removed) const;

    // Raw adjacency including edges to inactive vertices.
    const VertexSet& raw_adjacency(VertexId v) const { return (*adjacency_)[v]; }

private:
    friend Graph merge_vertices(const Graph&, VertexId, VertexId);

    Graph(std::shared_ptr<const std::vector<VertexSet>> adjacency, VertexSet active)
        : adjacency_(std::move(adjacency)), active_(std::move(active))
    {
    }

    std::shared_ptr<const std::vector<VertexSet>> adjacency_;
    VertexSet active_;
};

// N[X]: X together with its active neighbours. Throws if X has an inactive member.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& x);
VertexSet closed_neighborhood(const Graph& g, std::span<const VertexId> x);

// G - N[X] as a view.
Graph delete_closed_neighborhood(const Graph& g, const VertexSet& x);
Graph delete_closed_neighborhood(const Graph& g, std::span<const VertexId> x);

// Replaces adjacent u1, u2 by a single vertex with id u1 and N(u1) = N({u1, u2}).
Graph merge_vertices(const Graph& g, VertexId u1, VertexId u2);

// Distinct active vertices, consecutive pairs adjacent, no chords. Empty is false.
bool is_induced_path(const Graph& g, std::span<const VertexId> seq);

// Y ⊆ N[X].
bool dominates(const Graph& g, const VertexSet& x, const VertexSet& y);

// Shortest x-y path in G - forbidden (BFS, ascending neighbour order).
std::optional<std::vector<VertexId>> connecting_path(
    const Graph& g, VertexId x, VertexId y, const VertexSet& forbidden);

// Structural self-check: symmetric, loopless adjacency on the active part.
bool satisfies_invariants(const Graph& g);

} // namespace avoidable
