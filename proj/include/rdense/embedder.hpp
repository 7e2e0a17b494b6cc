#pragma once

#include "rdense/bidensity.hpp"
#include "rdense/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rdense::embedder
{
    struct PartitionResult
    {
        bool ok = false;
        std::vector<std::vector<Vertex>> parts;
        /// First vertex that found every part occupied by a neighbour.
        std::optional<Vertex> stuck;
    };

    /// Greedy proper colouring in vertex order into k independent sets; each
    /// vertex takes the lowest-index part with no neighbour in it. Always
    /// succeeds when k > Δ(H).
    auto greedy_partition(const Graph & h, std::size_t k) -> PartitionResult;

    /// δ^Δ / (4 Δ²), the bi-density scale at which greedy embedding of a
    /// maximum-degree-Δ graph is guaranteed. Requires Δ >= 1.
    auto lemma_sigma(double delta, std::size_t max_degree) -> double;

    struct HostSizeCheck
    {
        std::size_t part_size = 0;
        /// N >= 2 δ^{-Δ} n, where |V| = (Δ+1) N after truncation
        bool part_size_sufficient = false;
        /// |V| >= 4 δ^{-Δ} Δ n
        bool order_sufficient = false;
    };

    auto host_size_check(std::size_t host_order, std::size_t pattern_order, std::size_t max_degree, double delta)
        -> HostSizeCheck;

    struct CandidateSize
    {
        Vertex vertex;
        std::size_t size;
        std::size_t placed_neighbours;
        /// δ^{placed_neighbours} N
        double required;
    };

    struct EmbedStep
    {
        Vertex pattern_vertex;
        std::optional<Vertex> host_vertex;
        /// candidates examined and rejected before the chosen one
        std::size_t rejected = 0;
        /// |T_y| for every still-unplaced vertex after this step
        std::vector<CandidateSize> candidates;
        bool invariant_held = true;
    };

    struct EmbedTrace
    {
        std::vector<Vertex> order;
        std::size_t part_size = 0;
        HostSizeCheck sizes;
        std::vector<EmbedStep> steps;
        bool invariant_held = true;
    };

    struct FailureReport
    {
        std::size_t step = 0;
        Vertex stuck = 0;
        /// unused vertices left in the stuck vertex's candidate set
        std::size_t available = 0;
    };

    struct EmbedResult
    {
        std::optional<Embedding> embedding;
        std::optional<FailureReport> failure;
        EmbedTrace trace;

        auto success() const -> bool { return embedding.has_value(); }
    };

    struct EmbedOptions
    {
        /// Δ(H)+1 disjoint host parts of equal size. Default: consecutive
        /// blocks of size ⌊n/(Δ+1)⌋, dropping the remainder.
        std::optional<std::vector<std::vector<Vertex>>> host_parts;
    };

    /// Greedy embedding with candidate sets. Pattern vertices are taken in
    /// descending degree order; each goes to the lowest unused host vertex v
    /// in its candidate set such that every unplaced neighbour y keeps
    /// |N(v) ∩ T_y| >= δ |T_y|. A returned embedding has been verified.
    auto embed_greedy(const Graph & pattern, const Graph & host, double delta, const EmbedOptions & options = {})
        -> EmbedResult;

    auto embed_greedy(const Graph & pattern, const Coloring & host, Color color, double delta,
                      const EmbedOptions & options = {}) -> EmbedResult;

    /// Exact bi-(σ, δ)-density check. Only pairs of size exactly s = ⌈σn⌉
    /// are enumerated: the density of a larger pair is the mean over its
    /// size-s sub-pairs, so any violation shows up at size s. Returns the
    /// lexicographically first witness (ordered by X, then Y), or TooLarge
    /// when C(n, s)² exceeds `budget`.
    auto check_bidense_exact(const Graph & host, double sigma, double delta, std::uint64_t budget = 1'000'000'000)
        -> BiDensityResult;

    /// Randomised local search for a sparse pair: random disjoint s-sets,
    /// improved by single-vertex swaps with the outside while density drops.
    /// One-sided; nullopt proves nothing.
    auto find_sparse_pair_heuristic(const Graph & host, double sigma, double delta, std::uint64_t tries,
                                    std::uint64_t seed) -> std::optional<BiDensityWitness>;
}
