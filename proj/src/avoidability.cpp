#include "avoidable/avoidability.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace avoidable {

namespace {

void require_induced(const Graph& g, const Path& p, const char* what)
{
    if (!is_induced_path(g, p.vertices))
        throw InvalidArgument(std::string(what) + ": path is not induced");
}

void require_extension(const Graph& g, const Extension& ext, const char* what)
{
    if (ext.core.size() == 0 || !is_induced_path(g, ext.sequence()))
        throw InvalidArgument(std::string(what) + ": x·core·y is not an induced path");
}

} // namespace

std::vector<VertexId> Extension::sequence() const
{
    std::vector<VertexId> seq;
    seq.reserve(core.size() + 2);
    seq.push_back(x);
    seq.insert(seq.end(), core.vertices.begin(), core.vertices.end());
    seq.push_back(y);
    return seq;
}

std::vector<Extension> enumerate_extensions(const Graph& g, const Path& p)
{
    require_induced(g, p, "enumerate_extensions");
    std::vector<Extension> out;

    if (p.size() == 1) {
        auto v = p.front();
        auto nv = g.neighbors(v);
        for (auto x : nv)
            for (auto y : nv)
                if (x < y && !g.adjacent(x, y))
                    out.push_back({x, p, y});
        return out;
    }

    // A new endpoint may touch only its own end of the path.
    auto attachable = [&](std::size_t end) {
        VertexSet rest(g.order());
        for (std::size_t i = 0; i < p.size(); ++i)
            if (i != end)
                rest.insert(p.vertices[i]);
        return g.neighbors(p.vertices[end]) - closed_neighborhood(g, rest);
    };
    auto front_side = attachable(0);
    auto back_side = attachable(p.size() - 1);
    for (auto x : front_side)
        for (auto y : back_side)
            if (x != y && !g.adjacent(x, y))
                out.push_back({x, p, y});
    return out;
}

std::optional<Cycle> find_completing_cycle(const Graph& g, const Extension& ext)
{
    require_extension(g, ext, "find_completing_cycle");
    auto forbidden = closed_neighborhood(g, ext.core.vertices);
    forbidden.erase(ext.x);
    forbidden.erase(ext.y);

    auto back = connecting_path(g, ext.x, ext.y, forbidden);
    if (!back)
        return std::nullopt;

    Cycle c{ext.sequence()};
    // back runs x .. y; continue the cycle from y towards x
    for (auto it = back->rbegin() + 1; it + 1 != back->rend(); ++it)
        c.vertices.push_back(*it);
    return c;
}

bool is_failing(const Graph& g, const Extension& ext) { return !find_completing_cycle(g, ext).has_value(); }

Verdict check_avoidable(const Graph& g, const Path& p)
{
    require_induced(g, p, "check_avoidable");
    std::vector<Completion> completions;
    for (auto& ext : enumerate_extensions(g, p)) {
        auto cycle = find_completing_cycle(g, ext);
        if (!cycle)
            return Verdict{ext};
        completions.push_back({ext, std::move(*cycle)});
    }
    return Verdict{std::move(completions)};
}

std::vector<Path> enumerate_avoidable_paths(const Graph& g, std::size_t k)
{
    std::vector<Path> out;
    for (auto& p : enumerate_induced_paths(g, k))
        if (check_avoidable(g, p).avoidable())
            out.push_back(p);
    return out;
}

bool is_induced_cycle(const Graph& g, std::span<const VertexId> cycle)
{
    auto n = cycle.size();
    if (n < 3)
        return false;
    VertexSet seen(g.order());
    for (auto v : cycle) {
        if (!g.is_active(v) || seen.contains(v))
            return false;
        seen.insert(v);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive)
                return false;
        }
    return true;
}

bool cycle_contains_arc(std::span<const VertexId> cycle, std::span<const VertexId> seq)
{
    auto n = cycle.size();
    if (seq.empty() || seq.size() > n)
        return false;
    for (std::size_t start = 0; start < n; ++start) {
        for (int dir : {1, -1}) {
            bool ok = true;
            for (std::size_t i = 0; i < seq.size() && ok; ++i) {
                auto idx = dir == 1 ? (start + i) % n : (start + n - i % n) % n;
                ok = cycle[idx] == seq[i];
            }
            if (ok)
                return true;
        }
    }
    return false;
}

bool brute_force_is_failing(const Graph& g, const Extension& ext)
{
    auto seq = ext.sequence();
    if (!is_induced_path(g, seq))
        throw InvalidArgument("brute_force_is_failing: x·core·y is not an induced path");

    // Local indices over active vertices; masks are 64-bit.
    auto verts = g.active().to_vector();
    if (verts.size() > 64)
        throw InvalidArgument("brute_force_is_failing: graph too large for the oracle");
    std::vector<std::uint64_t> adj(verts.size(), 0);
    std::vector<int> local(g.order(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i)
        local[verts[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = 0; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j]))
                adj[i] |= std::uint64_t{1} << j;

    std::uint64_t required = 0;
    for (auto v : seq)
        required |= std::uint64_t{1} << local[v];
    std::vector<std::size_t> free_bits;
    for (std::size_t i = 0; i < verts.size(); ++i)
        if (!((required >> i) & 1))
            free_bits.push_back(i);
    if (free_bits.size() > 24)
        throw InvalidArgument("brute_force_is_failing: graph too large for the oracle");

    std::vector<VertexId> order;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << free_bits.size()); ++sub) {
        auto s = required;
        for (std::size_t b = 0; b < free_bits.size(); ++b)
            if ((sub >> b) & 1)
                s |= std::uint64_t{1} << free_bits[b];

        // G[S] is a cycle iff it is 2-regular and connected.
        bool regular = true;
        for (auto t = s; t && regular; t &= t - 1)
            regular = std::popcount(adj[std::countr_zero(t)] & s) == 2;
        if (!regular)
            continue;

        order.clear();
        int prev = -1;
        int cur = std::countr_zero(s);
        auto first = cur;
        do {
            order.push_back(verts[cur]);
            auto nbrs = adj[cur] & s;
            int next = std::countr_zero(nbrs);
            if (next == prev)
                next = std::countr_zero(nbrs & (nbrs - 1));
            prev = cur;
            cur = next;
        } while (cur != first);
        if (order.size() != static_cast<std::size_t>(std::popcount(s)))
            continue;
        if (cycle_contains_arc(order, seq))
            return false;
    }
    return true;
}

bool brute_force_is_avoidable(const Graph& g, const Path& p)
{
    require_induced(g, p, "brute_force_is_avoidable");
    auto outside = g.active() - VertexSet::from_range(g.order(), p.vertices);
    std::vector<VertexId> seq(p.size() + 2);
    std::copy(p.vertices.begin(), p.vertices.end(), seq.begin() + 1);
    for (auto x : outside)
        for (auto y : outside) {
            if (x == y || (p.size() == 1 && x > y))
                continue;
            seq.front() = x;
            seq.back() = y;
            if (!is_induced_path(g, seq))
                continue;
            if (brute_force_is_failing(g, Extension{x, p, y}))
                return false;
        }
    return true;
}

} // namespace avoidable
