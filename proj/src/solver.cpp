#include "avoidable/solver.hpp"

#include <algorithm>

namespace avoidable {

namespace {

class Search {
public:
    explicit Search(std::size_t k) : k_(k) { detail::require_positive_k(k); }

    std::variant<Path, PkFree> basic(const Graph& g)
    {
        for (auto u : g.active())
            if (has_pk(delete_closed_neighborhood(g, VertexSet(g.order(), {u}))))
                return refined(g, u);
        if (auto p = induced_path(g))
            return std::move(*p);
        return PkFree{g.active(), std::nullopt};
    }

    std::variant<Path, PkFree> refined(Graph g, VertexId u)
    {
        ++stats_.refined_calls;
        ++depth_;
        stats_.max_depth = std::max(stats_.max_depth, depth_);
        std::size_t entered = depth_ - 1;

        // Tail recursion of the merge step, unrolled.
        for (bool merged = true; merged;) {
            merged = false;
            for (auto v : g.neighbors(u)) {
                if (has_pk(delete_closed_neighborhood(g, VertexSet(g.order(), {u, v})))) {
                    g = merge_vertices(g, u, v);
                    ++stats_.merges;
                    ++stats_.refined_calls;
                    ++depth_;
                    stats_.max_depth = std::max(stats_.max_depth, depth_);
                    merged = true;
                    break;
                }
            }
        }

        auto exterior = delete_closed_neighborhood(g, VertexSet(g.order(), {u}));
        auto result = basic(exterior);
        if (auto* free = std::get_if<PkFree>(&result); free && !free->exterior_of)
            free->exterior_of = u;
        depth_ = entered;
        return result;
    }

    const SolveStats& stats() const { return stats_; }

private:
    std::optional<Path> induced_path(const Graph& g)
    {
        ++stats_.induced_path_calls;
        return find_induced_path(g, k_);
    }
    bool has_pk(const Graph& g) { return induced_path(g).has_value(); }

    std::size_t k_;
    std::size_t depth_ = 0;
    SolveStats stats_;
};

} // namespace

SolveResult find_avoidable_path(const Graph& g, std::size_t k)
{
    Search search(k);
    auto outcome = search.basic(g);
    return {std::move(outcome), search.stats()};
}

SolveResult find_avoidable_path_refined(const Graph& g, std::size_t k, VertexId u)
{
    Search search(k);
    if (!g.is_active(u))
        throw InvalidArgument("find_avoidable_path_refined: vertex " + std::to_string(u) + " is not active");
    auto outcome = search.refined(g, u);
    return {std::move(outcome), search.stats()};
}

SolveResult solve_with_stats(const Graph& g, std::size_t k) { return find_avoidable_path(g, k); }

} // namespace avoidable
