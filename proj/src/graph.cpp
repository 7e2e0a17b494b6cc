#include "rdense/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rdense
{
    Graph::Graph(std::size_t t) : rows_(t, Bitset(t)) {}

    auto Graph::from_edges(std::size_t t, std::span<const Edge> edges) -> Graph
    {
        Graph g(t);
        for (auto [u, v] : edges)
        {
            if (u >= t || v >= t)
                throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
            if (u == v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            if (g.rows_[u].test(v))
                throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            g.rows_[u].set(v);
            g.rows_[v].set(u);
            ++g.edges_;
        }
        return g;
    }

    auto Graph::from_rows(std::vector<Bitset> rows) -> Graph
    {
        Graph g;
        std::size_t degree_sum = 0;
        for (std::size_t u = 0; u < rows.size(); ++u)
        {
            if (rows[u].size() != rows.size())
                throw std::invalid_argument("adjacency row has wrong width");
            if (rows[u].test(u))
                throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            for (auto v = rows[u].find_first(); v < rows.size(); v = rows[u].find_next(v + 1))
                if (! rows[v].test(u))
                    throw std::invalid_argument("adjacency is not symmetric");
            degree_sum += rows[u].count();
        }
        g.rows_ = std::move(rows);
        g.edges_ = degree_sum / 2;
        return g;
    }

    auto Graph::complete(std::size_t t) -> Graph
    {
        std::vector<Bitset> rows(t, Bitset::full(t));
        for (std::size_t v = 0; v < t; ++v)
            rows[v].reset(v);
        return from_rows(std::move(rows));
    }

    auto Graph::path(std::size_t t) -> Graph
    {
        std::vector<Edge> e;
        for (Vertex v = 0; v + 1 < t; ++v)
            e.emplace_back(v, v + 1);
        return from_edges(t, e);
    }

    auto Graph::cycle(std::size_t t) -> Graph
    {
        if (t < 3)
            throw std::invalid_argument("cycle needs at least 3 vertices");
        std::vector<Edge> e;
        for (Vertex v = 0; v + 1 < t; ++v)
            e.emplace_back(v, v + 1);
        e.emplace_back(0, static_cast<Vertex>(t - 1));
        return from_edges(t, e);
    }

    auto Graph::max_degree() const -> std::size_t
    {
        std::size_t d = 0;
        for (auto & r : rows_)
            d = std::max(d, r.count());
        return d;
    }

    auto Graph::min_degree() const -> std::size_t
    {
        if (rows_.empty())
            return 0;
        std::size_t d = rows_.size();
        for (auto & r : rows_)
            d = std::min(d, r.count());
        return d;
    }

    auto Graph::isolated_free() const -> bool
    {
        return std::none_of(rows_.begin(), rows_.end(), [](const Bitset & r) { return r.none(); });
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> out;
        out.reserve(edges_);
        for (std::size_t u = 0; u < rows_.size(); ++u)
            for (auto v = rows_[u].find_next(u + 1); v < rows_.size(); v = rows_[u].find_next(v + 1))
                out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        return out;
    }

    auto Graph::induced(std::span<const Vertex> keep) const -> Graph
    {
        std::vector<Bitset> rows(keep.size(), Bitset(keep.size()));
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = i + 1; j < keep.size(); ++j)
                if (adjacent(keep[i], keep[j]))
                {
                    rows[i].set(j);
                    rows[j].set(i);
                }
        return from_rows(std::move(rows));
    }

    auto Graph::complement() const -> Graph
    {
        std::vector<Bitset> rows(order(), Bitset::full(order()));
        for (std::size_t v = 0; v < order(); ++v)
        {
            rows[v].subtract(rows_[v]);
            rows[v].reset(v);
        }
        return from_rows(std::move(rows));
    }

    Coloring::Coloring(Graph red) : red_(std::move(red)), blue_(red_.complement()) {}

    auto Coloring::all(std::size_t n, Color c) -> Coloring
    {
        return Coloring(c == Color::Red ? Graph::complete(n) : Graph::empty(n));
    }

    auto Coloring::induced(std::span<const Vertex> keep) const -> Coloring
    {
        return Coloring(red_.induced(keep));
    }

    void validate_witness(const Graph & g, const BoundedGraphWitness & w)
    {
        Bitset exceptional(g.order());
        for (auto v : w.exceptional)
        {
            if (v >= g.order())
                throw std::invalid_argument("exceptional vertex out of range");
            if (exceptional.test(v))
                throw std::invalid_argument("exceptional vertex listed twice");
            exceptional.set(v);
        }
        for (Vertex v = 0; v < g.order(); ++v)
            if (! exceptional.test(v) && g.degree(v) > w.max_degree)
                throw std::invalid_argument("vertex " + std::to_string(v) + " exceeds the degree cap but is not exceptional");
    }

    auto graph_stats(const Graph & g) -> GraphStats
    {
        if (g.order() < 2)
            throw std::invalid_argument("graph_stats needs at least 2 vertices");
        GraphStats s;
        s.t = g.order();
        s.m = g.edge_count();
        s.density = Rational(static_cast<std::int64_t>(s.m), choose2(static_cast<std::int64_t>(s.t)));
        s.density_value = to_double(s.density);
        s.max_degree = g.max_degree();
        s.isolated_free = g.isolated_free();
        return s;
    }

    auto edges_between(const Graph & g, const Bitset & x, const Bitset & y) -> std::size_t
    {
        std::size_t e = 0;
        for (auto v = x.find_first(); v < x.size(); v = x.find_next(v + 1))
            e += g.neighbours(static_cast<Vertex>(v)).intersect_count(y);
        return e;
    }

    auto density_pair(const Graph & g, std::span<const Vertex> x, std::span<const Vertex> y) -> Rational
    {
        if (x.empty() || y.empty())
            throw std::invalid_argument("density_pair: vertex sets must be nonempty");
        Bitset xs(g.order()), ys(g.order());
        for (auto v : x)
        {
            if (v >= g.order() || xs.test(v))
                throw std::invalid_argument("density_pair: bad or repeated vertex in X");
            xs.set(v);
        }
        for (auto v : y)
        {
            if (v >= g.order() || ys.test(v))
                throw std::invalid_argument("density_pair: bad or repeated vertex in Y");
            ys.set(v);
        }
        if (xs.intersects(ys))
            throw std::invalid_argument("density_pair: X and Y overlap");
        auto e = static_cast<std::int64_t>(edges_between(g, xs, ys));
        return Rational(e, static_cast<std::int64_t>(x.size() * y.size()));
    }

    auto density_pair(const Coloring & c, Color color, std::span<const Vertex> x, std::span<const Vertex> y) -> Rational
    {
        return density_pair(c.graph(color), x, y);
    }
}
