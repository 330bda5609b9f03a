#pragma once

#include "avoidable/solver.hpp"

#include <optional>
#include <utility>

namespace avoidable {

struct ContractedGraph {
    Graph graph;
    VertexId vertex;
};

/// Merges the connected set X into one vertex. Tree edges (Kruskal over the
/// edges of G[X] in ascending (u, v) order) are contracted leaf-first, smallest
/// leaf first, each leaf into its tree neighbour.
ContractedGraph contract_connected_set(const Graph& g, const VertexSet& x);

// Avoidable P_k of g inside G - N[X], or a certificate that G - N[X] is P_k-free.
SolveResult find_avoidable_outside(const Graph& g, const VertexSet& x, std::size_t k);

/// Two avoidable P_k with no vertex or edge between them, or nullopt when g has
/// no pair of non-adjacent P_k at all.
std::optional<std::pair<Path, Path>> find_two_nonadjacent_avoidable(const Graph& g, std::size_t k);

// Cycle c_0 .. c_{2k-2} on ids 0 .. 2k-2, apex 2k-1 adjacent to c_0 and c_1. Requires k >= 3.
Graph counterexample_graph(std::size_t k);
inline VertexId counterexample_apex(std::size_t k) { return static_cast<VertexId>(2 * k - 1); }

struct DisjointReport {
    bool has_two_disjoint_pk = false;
    bool has_two_disjoint_avoidable = false;
    std::optional<std::pair<Path, Path>> disjoint_pk_witness;
    std::optional<std::pair<Path, Path>> disjoint_avoidable_witness;
};

// Searches all pairs of induced P_k of g for vertex-disjoint ones.
DisjointReport disjoint_pair_report(const Graph& g, std::size_t k);

// disjoint_pair_report on counterexample_graph(k); 3 <= k <= 6.
DisjointReport verify_counterexample(std::size_t k);

} // namespace avoidable
