#pragma once

#include "avoidable/solver.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace avoidable {

// Induced P_k found by testing every k-subset for inducing a path. Canonical, sorted.
std::vector<Path> brute_force_induced_paths(const Graph& g, std::size_t k);

// Structural bounds every solve must respect: merges <= n-1, refined_calls <= n,
// max_depth <= n, for n active vertices. Empty string when they hold.
std::string check_stat_bounds(const SolveStats& stats, std::size_t n);

struct ExhaustiveOptions {
    std::size_t max_n = 6;
    std::size_t max_k = 6;
    unsigned threads = 1;
    // Also check the refined search on every vertex.
    bool check_refined = false;
};

struct ExhaustiveRow {
    std::size_t n = 0;
    std::uint64_t graphs = 0;
    std::uint64_t solves = 0;
    std::uint64_t avoidable_found = 0;
    std::uint64_t pk_free = 0;
    std::uint64_t refined_solves = 0;
};

struct ExhaustiveReport {
    std::vector<ExhaustiveRow> rows;
    // "n=<n> mask=<mask> k=<k>: <what>", sorted.
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Runs the solver on every labeled graph with at most max_n vertices and every
/// k <= min(n, max_k), checking each answer against the subset oracles.
ExhaustiveReport run_exhaustive(const ExhaustiveOptions& options);

enum class BenchFamily { gnp, cycle, chordal };

struct BenchRun {
    Graph graph;
    SolveResult result;
    double wall_ms = 0;
};

// Builds the family member (gnp uses probability p) and times one solve.
BenchRun run_bench(BenchFamily family, std::size_t n, std::size_t k, std::uint64_t seed, double p = 0.3);

} // namespace avoidable
