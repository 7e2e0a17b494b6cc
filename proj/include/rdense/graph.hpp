#pragma once

#include "rdense/bitset.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rdense
{
    using Rational = boost::rational<std::int64_t>;

    inline auto to_double(const Rational & r) -> double
    {
        return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
    }

    inline auto choose2(std::int64_t n) -> std::int64_t { return n * (n - 1) / 2; }

    using Edge = std::pair<Vertex, Vertex>;

    /// Undirected simple graph with packed adjacency rows. Immutable once built.
    class Graph
    {
    public:
        Graph() = default;

        /// Edgeless graph on t vertices.
        explicit Graph(std::size_t t);

        /// Throws std::invalid_argument on self-loops, duplicates or out-of-range endpoints.
        static auto from_edges(std::size_t t, std::span<const Edge> edges) -> Graph;
        static auto from_rows(std::vector<Bitset> rows) -> Graph;

        static auto complete(std::size_t t) -> Graph;
        static auto path(std::size_t t) -> Graph;
        static auto cycle(std::size_t t) -> Graph;
        static auto empty(std::size_t t) -> Graph { return Graph(t); }

        auto order() const -> std::size_t { return rows_.size(); }
        auto edge_count() const -> std::size_t { return edges_; }
        auto adjacent(Vertex u, Vertex v) const -> bool { return rows_[u].test(v); }
        auto neighbours(Vertex v) const -> const Bitset & { return rows_[v]; }
        auto rows() const -> std::span<const Bitset> { return rows_; }
        auto degree(Vertex v) const -> std::size_t { return rows_[v].count(); }
        auto max_degree() const -> std::size_t;
        auto min_degree() const -> std::size_t;
        auto isolated_free() const -> bool;

        /// Edges as (u, v) with u < v in lexicographic order.
        auto edges() const -> std::vector<Edge>;

        /// Induced subgraph on `keep` (in the given order; vertex i of the
        /// result is keep[i]).
        auto induced(std::span<const Vertex> keep) const -> Graph;

        auto complement() const -> Graph;

        friend auto operator==(const Graph &, const Graph &) -> bool = default;

    private:
        std::vector<Bitset> rows_;
        std::size_t edges_ = 0;
    };

    enum class Color : std::uint8_t
    {
        Red,
        Blue
    };

    inline auto opposite(Color c) -> Color { return c == Color::Red ? Color::Blue : Color::Red; }
    inline auto color_letter(Color c) -> char { return c == Color::Red ? 'R' : 'B'; }
    inline auto color_name(Color c) -> const char * { return c == Color::Red ? "red" : "blue"; }

    /// Red/Blue colouring of the edges of K_n, stored as its two colour classes.
    class Coloring
    {
    public:
        Coloring() = default;

        /// Edges of `red` are Red, all other pairs Blue.
        explicit Coloring(Graph red);

        static auto all(std::size_t n, Color c) -> Coloring;

        auto order() const -> std::size_t { return red_.order(); }
        auto color(Vertex u, Vertex v) const -> Color { return red_.adjacent(u, v) ? Color::Red : Color::Blue; }
        auto graph(Color c) const -> const Graph & { return c == Color::Red ? red_ : blue_; }
        auto neighbours(Vertex v, Color c) const -> const Bitset & { return graph(c).neighbours(v); }

        auto induced(std::span<const Vertex> keep) const -> Coloring;

        friend auto operator==(const Coloring & a, const Coloring & b) -> bool { return a.red_ == b.red_; }

    private:
        Graph red_;
        Graph blue_;
    };

    /// Injective map pattern vertex -> host vertex; image[x] is the host vertex of x.
    struct Embedding
    {
        std::vector<Vertex> image;
    };

    /// A graph that is (max_degree, |exceptional|)-bounded: every vertex outside
    /// `exceptional` has degree at most `max_degree`.
    struct BoundedGraphWitness
    {
        std::size_t max_degree = 0;
        std::vector<Vertex> exceptional;
    };

    /// Throws std::invalid_argument if the witness does not hold for g.
    void validate_witness(const Graph & g, const BoundedGraphWitness & w);

    struct GraphStats
    {
        std::size_t t = 0;
        std::size_t m = 0;
        Rational density;
        double density_value = 0.0;
        std::size_t max_degree = 0;
        bool isolated_free = false;
    };

    /// Requires t >= 2.
    auto graph_stats(const Graph & g) -> GraphStats;

    /// e(X, Y) / (|X| |Y|). X and Y must be nonempty and disjoint.
    auto density_pair(const Graph & g, std::span<const Vertex> x, std::span<const Vertex> y) -> Rational;
    auto density_pair(const Coloring & c, Color color, std::span<const Vertex> x, std::span<const Vertex> y) -> Rational;

    /// Number of edges between two disjoint vertex sets given as bit rows.
    auto edges_between(const Graph & g, const Bitset & x, const Bitset & y) -> std::size_t;
}
