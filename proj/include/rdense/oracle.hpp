#pragma once

#include "rdense/bidensity.hpp"
#include "rdense/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

// Ground truth at desk scale. Everything here is exhaustive and complete; the
// constructive search modules re-verify their results through it.
namespace rdense::oracle
{
    /// Complete backtracking search for a (not necessarily induced) copy of
    /// `pattern` in the graph given by adjacency `rows`, restricted to
    /// `allowed` when supplied. Pattern vertices are placed in descending
    /// degree order (ties by index); the first embedding in that order is
    /// returned.
    auto find_subgraph(std::span<const Bitset> rows, const Graph & pattern, const Bitset * allowed = nullptr)
        -> std::optional<Embedding>;

    auto find_subgraph(const Graph & host, const Graph & pattern, const Bitset * allowed = nullptr)
        -> std::optional<Embedding>;

    /// True iff some copy of `pattern` in `rows` uses the edge {u, v}.
    auto has_subgraph_through_edge(std::span<const Bitset> rows, const Graph & pattern, Vertex u, Vertex v) -> bool;

    auto find_mono_subgraph_exact(const Coloring & coloring, const Graph & pattern, Color color)
        -> std::optional<Embedding>;

    struct Verification
    {
        bool ok = true;
        std::string violation;
    };

    /// Injectivity and edge preservation. Throws std::invalid_argument if the
    /// map is not total on V(pattern).
    auto verify_embedding(const Graph & pattern, const Graph & host, std::span<const Vertex> image) -> Verification;
    auto verify_embedding(const Graph & pattern, const Coloring & host, Color color, std::span<const Vertex> image)
        -> Verification;

    /// Distinct vertices, pairwise adjacent.
    auto verify_clique(const Graph & host, std::span<const Vertex> vertices) -> Verification;

    struct RamseyOptions
    {
        std::size_t guard = 8;
    };

    /// r(H1, H2): smallest n such that every colouring of K_n has a blue H1
    /// or a red H2.
    struct RamseyCertificate
    {
        bool refused = false;
        std::string refusal;
        /// Exact value when the enumeration closed at or below n_max.
        std::optional<std::size_t> value;
        /// Largest n with an avoiding colouring found (0 if none).
        std::size_t lower_n = 0;
        std::optional<Coloring> witness;
        std::uint64_t nodes = 0;
    };

    /// Enumerates colourings of K_n edge by edge, pruning as soon as a
    /// monochromatic target appears through the newest edge. Edge {0,1} is
    /// fixed Red (any colouring with a red edge is isomorphic to one of
    /// those) and the all-blue colouring is examined separately.
    auto ramsey_number_exact(const Graph & h1, const Graph & h2, std::size_t n_max, RamseyOptions options = {})
        -> RamseyCertificate;

    /// Is `coloring` free of blue h1 and red h2?
    auto avoids(const Coloring & coloring, const Graph & h1, const Graph & h2) -> bool;

    struct LowerCertificate
    {
        std::optional<Coloring> coloring;
        std::uint64_t tries_used = 0;
    };

    /// Random colourings of K_n with P(Red) = p_red until one has no
    /// monochromatic copy of `pattern` in either colour.
    auto lower_bound_certificate_random(const Graph & pattern, std::size_t n, std::uint64_t tries,
                                        std::uint64_t seed, double p_red = 0.5) -> LowerCertificate;

    /// Reference bi-density check over disjoint pairs of every admissible
    /// size. Refuses (TooLarge) above 12 vertices.
    auto check_bidense_bruteforce(const Graph & host, double sigma, double delta) -> BiDensityResult;

    /// One representative per isomorphism class of graphs on t <= 6 vertices.
    auto enumerate_graphs(std::size_t t, bool isolated_free_only) -> std::vector<Graph>;
}
