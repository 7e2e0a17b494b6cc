#pragma once

#include "rdense/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Constructive searches that follow the inductive Ramsey arguments on a
// concrete colouring. The arguments only guarantee success for astronomically
// large n, so the contract here is soundness and traceability: every Found
// outcome is re-verified before it is returned, and everything else comes
// back as Exhausted with the point where the search ran dry.
namespace rdense::search
{
    /// Iterated pivoting. U_0 is the start set; each step takes the lowest
    /// vertex u of U_i, records R and keeps its red neighbours in U_i when
    /// there are at least threshold·(|U_i| - 1) of them, and records B and
    /// keeps its blue neighbours otherwise.
    struct ChaseState
    {
        Bitset start;
        std::vector<Vertex> pivots;
        std::vector<Color> letters;
        /// sets[i] = U_{i+1}, the set left after pivot i
        std::vector<Bitset> sets;
        double red_threshold = 0.0;

        auto letter_string() const -> std::string;
        auto count(Color c) const -> std::size_t;
        /// Last set, or the start set when no step was taken.
        auto final_set() const -> const Bitset &;
        /// Pivots with letter c: a c-clique, c-joined to every later pivot and to final_set().
        auto pivots_with(Color c) const -> std::vector<Vertex>;
    };

    auto neighborhood_chase(const Coloring & coloring, const Bitset & start, double red_threshold, std::size_t stop_red,
                            std::size_t stop_blue) -> ChaseState;

    /// Structural check of a chase from the trace alone: nesting, pivot
    /// membership, pivot adjacency in the recorded colour, threshold
    /// consistency and stop rule. Empty string when consistent.
    auto check_chase(const Coloring & coloring, const ChaseState & chase, std::size_t stop_red, std::size_t stop_blue)
        -> std::string;

    /// {v in A : blue degree of v into B >= (1 - 2ρ)|B|}.
    auto filter_high_blue_degree(const Coloring & coloring, const Bitset & a, const Bitset & b, double rho) -> Bitset;

    enum class PigeonholeMode
    {
        Exact,
        Greedy
    };

    struct Pigeonhole
    {
        std::vector<Vertex> t;
        Bitset common;
    };

    /// Choose T ⊆ S with |T| = l and B' = vertices of B joined in `color` to
    /// all of T. Exact maximises |B'| over all l-subsets (lexicographically
    /// first on ties; throws when C(|S|, l) exceeds `budget`). Greedy drops,
    /// one at a time, the vertex whose removal keeps the most common
    /// neighbours.
    auto common_neighborhood_pigeonhole(const Coloring & coloring, std::span<const Vertex> s, const Bitset & b,
                                        std::size_t l, Color color, PigeonholeMode mode,
                                        std::uint64_t budget = 10'000'000) -> Pigeonhole;

    struct DegreeSplit
    {
        Graph reduced;
        /// vertex i of `reduced` is kept[i] in the original graph
        std::vector<Vertex> kept;
        std::vector<Vertex> removed;
    };

    /// Removes every vertex of degree > cap; isolated vertices are kept.
    auto split_high_degree(const Graph & h, double cap) -> DegreeSplit;

    enum class LRule
    {
        Half,
        RandomGraph
    };

    struct SearchConfig
    {
        /// density parameter driving thresholds
        double rho = 0.05;
        /// δ for the greedy embedding; <= 0 means "use rho"
        double embed_delta = 0.0;
        /// σ for the sparse-pair search
        double sigma = 0.25;
        std::uint64_t sparse_pair_tries = 8;
        double clique_fraction = 2.0 / 3.0;
        LRule l_rule = LRule::Half;
        std::size_t max_depth = 24;
        std::uint64_t node_budget = 2000;
        /// exhaustive base case when s <= base_s or C(|U|, s) <= base_enum_cap
        std::size_t base_s = 8;
        double base_enum_cap = 1e7;
        /// exact pigeonhole when C(|S|, l) <= this, greedy otherwise
        std::uint64_t pigeonhole_exact_cap = 200'000;
        /// final exhaustive pass over the chase vertices when at most this many
        std::size_t chase_base_cap = 24;
        /// stop counts for the neighbourhood chase; 0 = derived from H
        std::size_t stop_red = 0;
        std::size_t stop_blue = 0;
        std::uint64_t seed = 0;
    };

    struct TraceEvent
    {
        std::size_t depth;
        std::string kind;
        std::size_t set_size;
        std::size_t target;
        std::string detail;
    };

    struct SearchTrace
    {
        std::vector<TraceEvent> events;
        std::vector<ChaseState> chases;
        std::size_t deepest = 0;
        std::uint64_t nodes = 0;
        std::string reason;
    };

    enum class OutcomeKind
    {
        FoundRedH,
        FoundBlueClique,
        FoundMono,
        Exhausted
    };

    auto outcome_name(OutcomeKind k) -> const char *;

    struct SearchOutcome
    {
        OutcomeKind kind = OutcomeKind::Exhausted;
        /// colour of the found structure (red for FoundRedH, blue for FoundBlueClique)
        Color color = Color::Red;
        /// pattern embedding for FoundRedH / FoundMono
        std::optional<Embedding> embedding;
        /// clique vertices for FoundBlueClique
        std::vector<Vertex> clique;
        SearchTrace trace;

        auto found() const -> bool { return kind != OutcomeKind::Exhausted; }
    };

    /// Red copy of H or blue K_s: greedy embedding into the red class, else a
    /// sparse red pair (A, B) with high-blue-degree filter A', recursion for a
    /// blue K_{⌈2s/3⌉} in A', a common blue neighbourhood of l = ⌈s/2⌉ of its
    /// vertices in B, and recursion for the remaining blue K_{s-l} there.
    auto find_red_H_or_blue_clique(const Coloring & coloring, const Graph & h, std::size_t s,
                                   const SearchConfig & config) -> SearchOutcome;

    /// Monochromatic H: strip high-degree vertices, chase with threshold 1/2,
    /// then look for the stripped graph (or an opposite-colour K_t) inside the
    /// final chase set and reattach the stripped vertices to the pivot clique.
    auto find_mono_H(const Coloring & coloring, const Graph & h, const SearchConfig & config) -> SearchOutcome;

    /// Monochromatic H given a bounded-degree witness: exceptional vertices
    /// go to pivot cliques from a red chase and a blue chase, the remainder is
    /// handled by the two-sided recursion with balanced bisections.
    auto find_random_graph_mono(const Coloring & coloring, const Graph & h, const BoundedGraphWitness & witness,
                                const SearchConfig & config) -> SearchOutcome;

    /// Re-checks a Found outcome against the colouring (empty when valid).
    auto verify_outcome(const Coloring & coloring, const Graph & h, std::size_t s, const SearchOutcome & outcome)
        -> std::string;
}
