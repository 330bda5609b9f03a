#pragma once

#include "avoidable/path_search.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace avoidable {

// x·core·y, an induced path one vertex longer than the core on each side.
struct Extension {
    VertexId x;
    Path core;
    VertexId y;

    std::vector<VertexId> sequence() const;
    friend bool operator==(const Extension&, const Extension&) = default;
};

// Induced cycle, listed in cyclic order.
struct Cycle {
    std::vector<VertexId> vertices;
};

// An extension together with an induced cycle that contains it.
struct Completion {
    Extension extension;
    Cycle cycle;
};

struct Verdict {
    // Completions for every extension (avoidable), or the first failing extension.
    std::variant<std::vector<Completion>, Extension> witness;

    bool avoidable() const { return std::holds_alternative<std::vector<Completion>>(witness); }
    const std::vector<Completion>& completions() const { return std::get<std::vector<Completion>>(witness); }
    const Extension& failing_extension() const { return std::get<Extension>(witness); }
};

/// All extensions of the induced path `p`. For |p| >= 2 the core keeps the
/// orientation of `p` and x attaches to its front; for |p| = 1 pairs are
/// reported once with x < y. Throws if `p` is not induced in `g`.
std::vector<Extension> enumerate_extensions(const Graph& g, const Path& p);

/// An induced cycle through x·core·y, if one exists.
///
/// Such a cycle exists iff x and y are joined by a path avoiding N[core]
/// (x and y themselves excepted). A shortest such path has no chords and no
/// vertex adjacent to the core, so it closes x·core·y into an induced cycle.
std::optional<Cycle> find_completing_cycle(const Graph& g, const Extension& ext);

bool is_failing(const Graph& g, const Extension& ext);

Verdict check_avoidable(const Graph& g, const Path& p);

// Induced P_k that are avoidable in g, in enumeration order.
std::vector<Path> enumerate_avoidable_paths(const Graph& g, std::size_t k);

// Oracles. These share nothing with the reduction above: they enumerate vertex
// subsets and test each for inducing a cycle. Intended for small graphs.
bool brute_force_is_failing(const Graph& g, const Extension& ext);
bool brute_force_is_avoidable(const Graph& g, const Path& p);

// Cyclic order, chord-freeness and adjacency of consecutive vertices.
bool is_induced_cycle(const Graph& g, std::span<const VertexId> cycle);
// Whether `seq` appears as a run of consecutive vertices of `cycle`, in either direction.
bool cycle_contains_arc(std::span<const VertexId> cycle, std::span<const VertexId> seq);

} // namespace avoidable
