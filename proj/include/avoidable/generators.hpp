#pragma once

#include "avoidable/graph.hpp"

#include <cstdint>

namespace avoidable {

struct Seed {
    std::uint64_t value = 0;
};

Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
Graph make_complete(std::size_t n);
// Centre 0, leaves 1 .. n-1.
Graph make_star(std::size_t n);
// Vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// G(n, p). The stream is std::mt19937_64 seeded with seed.value; the pairs
/// (0,1), (0,2), ..., (0,n-1), (1,2), ... each draw one 64-bit word w, and the
/// pair is an edge iff (w >> 11) * 2^-53 < p.
Graph gnp(std::size_t n, double p, Seed seed);

/// Chordal graph grown by reverse perfect elimination: vertex i joins a clique
/// of the graph on 0 .. i-1. The clique is seeded by a uniformly random earlier
/// vertex (none with probability 1/8), then each remaining earlier vertex, in a
/// shuffled order, is kept with probability 1/2 if adjacent to the whole clique.
Graph random_chordal(std::size_t n, Seed seed);

// Greedy simplicial-vertex elimination on the active part.
bool is_chordal(const Graph& g);

// Number of labeled graphs on n vertices, 2^(n choose 2).
std::uint64_t labeled_graph_count(std::size_t n);

/// The labeled graph whose edge set is `mask`: bit i selects the i-th pair in
/// the order (0,1), (0,2), ..., (0,n-1), (1,2), ...
Graph labeled_graph(std::size_t n, std::uint64_t mask);

/// All labeled graphs on n <= 7 vertices, indexed by edge mask.
class LabeledGraphs {
public:
    class const_iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Graph;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = Graph;

        const_iterator() = default;
        const_iterator(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask) { }
        Graph operator*() const { return labeled_graph(n_, mask_); }
        const_iterator& operator++()
        {
            ++mask_;
            return *this;
        }
        const_iterator operator++(int)
        {
            auto old = *this;
            ++mask_;
            return old;
        }
        bool operator==(const const_iterator& o) const { return mask_ == o.mask_; }

    private:
        std::size_t n_ = 0;
        std::uint64_t mask_ = 0;
    };

    explicit LabeledGraphs(std::size_t n);

    std::uint64_t size() const { return labeled_graph_count(n_); }
    Graph operator[](std::uint64_t mask) const { return labeled_graph(n_, mask); }
    const_iterator begin() const { return {n_, 0}; }
    const_iterator end() const { return {n_, size()}; }

private:
    std::size_t n_;
};

inline LabeledGraphs all_labeled_graphs(std::size_t n) { return LabeledGraphs(n); }

} // namespace avoidable
