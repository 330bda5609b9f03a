#pragma once

#include "avoidable/path_search.hpp"

#include <optional>
#include <variant>

namespace avoidable {

// Counters shadowing the cost recurrence of the search.
struct SolveStats {
    std::size_t merges = 0;
    std::size_t refined_calls = 0;
    std::size_t induced_path_calls = 0;
    // Deepest nesting of refined calls.
    std::size_t max_depth = 0;

    friend bool operator==(const SolveStats&, const SolveStats&) = default;
};

// Certificate that the graph with active set `certified` has no induced P_k.
// `exterior_of` is set when that graph is G - N[u] for a refined call on u.
struct PkFree {
    VertexSet certified;
    std::optional<VertexId> exterior_of;

    friend bool operator==(const PkFree&, const PkFree&) = default;
};

struct SolveResult {
    std::variant<Path, PkFree> outcome;
    SolveStats stats;

    bool found() const { return std::holds_alternative<Path>(outcome); }
    const Path& path() const { return std::get<Path>(outcome); }
    const PkFree& pk_free() const { return std::get<PkFree>(outcome); }
};

/// Returns an avoidable induced P_k of `g`, or certifies that `g` is P_k-free.
///
/// For each u ascending, if G - N[u] contains a P_k the refined search on u
/// takes over. When no such u exists every P_k dominates V(G), and any P_k
/// found is avoidable.
SolveResult find_avoidable_path(const Graph& g, std::size_t k);

/// Returns a P_k that is avoidable in `g` and disjoint from N[u], or certifies
/// that G - N[u] is P_k-free.
///
/// While some neighbour v of u leaves a P_k in G - N[{u, v}], v is merged into
/// u (u keeps its id). Otherwise every P_k of G - N[u] dominates N(u), and an
/// avoidable P_k of G - N[u] is avoidable in G.
SolveResult find_avoidable_path_refined(const Graph& g, std::size_t k, VertexId u);

// find_avoidable_path; kept as a separate entry point for instrumented runs.
SolveResult solve_with_stats(const Graph& g, std::size_t k);

} // namespace avoidable
