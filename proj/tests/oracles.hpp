#pragma once

// Test-only reference procedures. They go through nothing but Graph::adjacent
// and Graph::active, so they stay independent of the search code they check.

#include "avoidable/path_search.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using avoidable::Graph;
using avoidable::Path;
using avoidable::VertexId;

inline bool ordering_is_induced_path(const Graph& g, const std::vector<VertexId>& seq)
{
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (g.adjacent(seq[i], seq[j]) != (j == i + 1))
                return false;
    return true;
}

// Every k-subset, every ordering; canonical orientation, sorted.
inline std::vector<Path> induced_paths(const Graph& g, std::size_t k)
{
    auto verts = g.active().to_vector();
    std::set<std::vector<VertexId>> found;
    if (k == 0 || k > verts.size())
        return {};
    std::vector<bool> pick(verts.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
        std::vector<VertexId> subset;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (pick[i])
                subset.push_back(verts[i]);
        std::sort(subset.begin(), subset.end());
        do {
            if (ordering_is_induced_path(g, subset) && (k == 1 || subset.front() < subset.back()))
                found.insert(subset);
        } while (std::next_permutation(subset.begin(), subset.end()));
    } while (std::prev_permutation(pick.begin(), pick.end()));

    std::vector<Path> out;
    for (auto& s : found)
        out.push_back(Path{s});
    return out;
}

// Vertex sets of all induced cycles (2-regular connected induced subgraphs).
inline std::vector<std::vector<VertexId>> induced_cycle_sets(const Graph& g)
{
    auto verts = g.active().to_vector();
    auto n = verts.size();
    std::vector<std::vector<VertexId>> out;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        std::vector<VertexId> members;
        for (std::size_t i = 0; i < n; ++i)
            if ((s >> i) & 1)
                members.push_back(verts[i]);
        if (members.size() < 3)
            continue;
        bool regular = true;
        for (auto a : members) {
            int d = 0;
            for (auto b : members)
                d += g.adjacent(a, b);
            regular = regular && d == 2;
        }
        if (!regular)
            continue;
        // connected: walk from members[0]
        std::set<VertexId> seen{members[0]};
        std::vector<VertexId> stack{members[0]};
        while (!stack.empty()) {
            auto a = stack.back();
            stack.pop_back();
            for (auto b : members)
                if (g.adjacent(a, b) && seen.insert(b).second)
                    stack.push_back(b);
        }
        if (seen.size() == members.size())
            out.push_back(members);
    }
    return out;
}

inline bool some_cycle_contains(const std::vector<std::vector<VertexId>>& cycles, std::vector<VertexId> vs)
{
    std::sort(vs.begin(), vs.end());
    for (auto& c : cycles)
        if (std::includes(c.begin(), c.end(), vs.begin(), vs.end()))
            return true;
    return false;
}

// Avoidable vertex: every induced P_3 with middle v lies in an induced cycle.
inline bool avoidable_vertex(const Graph& g, VertexId v)
{
    auto cycles = induced_cycle_sets(g);
    for (auto x : g.active())
        for (auto y : g.active())
            if (x < y && x != v && y != v && g.adjacent(x, v) && g.adjacent(v, y) && !g.adjacent(x, y)
                && !some_cycle_contains(cycles, {x, v, y}))
                return false;
    return true;
}

// Avoidable edge uv: every induced P_4 with middle edge uv lies in an induced cycle.
inline bool avoidable_edge(const Graph& g, VertexId u, VertexId v)
{
    auto cycles = induced_cycle_sets(g);
    for (auto a : g.active())
        for (auto b : g.active()) {
            std::vector<VertexId> seq{a, u, v, b};
            std::set<VertexId> distinct(seq.begin(), seq.end());
            if (distinct.size() == 4 && ordering_is_induced_path(g, seq) && !some_cycle_contains(cycles, seq))
                return false;
        }
    return true;
}

// Two induced P_k with no common vertex and no edge between them.
inline bool has_two_nonadjacent(const Graph& g, std::size_t k)
{
    auto paths = induced_paths(g, k);
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
            bool apart = true;
            for (auto a : paths[i].vertices)
                for (auto b : paths[j].vertices)
                    apart = apart && a != b && !g.adjacent(a, b);
            if (apart)
                return true;
        }
    return false;
}

} // namespace oracle
