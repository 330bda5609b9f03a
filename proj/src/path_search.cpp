#include "avoidable/path_search.hpp"

#include <algorithm>

namespace avoidable {

void detail::require_positive_k(std::size_t k)
{
    if (k == 0)
        throw InvalidArgument("path length k must be at least 1");
}

Path canonical(Path p)
{
    if (p.size() >= 2 && p.front() > p.back())
        std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
}

std::optional<Path> find_induced_path(const Graph& g, std::size_t k)
{
    std::optional<Path> found;
    for_each_induced_path(g, k, [&](std::span<const VertexId> seq) {
        found = Path{{seq.begin(), seq.end()}};
        return false;
    });
    return found;
}

std::vector<Path> enumerate_induced_paths(const Graph& g, std::size_t k)
{
    std::vector<Path> out;
    for_each_induced_path(g, k, [&](std::span<const VertexId> seq) {
        out.push_back(Path{{seq.begin(), seq.end()}});
        return true;
    });
    return out;
}

} // namespace avoidable
