#pragma once

// Naive reference implementations used to cross-check the library. They share
// only the Graph/Coloring containers with the code under test.

#include "rdense/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace ref
{
    using rdense::Color;
    using rdense::Coloring;
    using rdense::Graph;
    using rdense::Vertex;

    using Adjacent = std::function<bool(Vertex, Vertex)>;

    /// Tries every injective map V(h) -> [n].
    inline auto has_copy(const Graph & h, std::size_t n, const Adjacent & adj) -> bool
    {
        auto t = h.order();
        if (t > n)
            return false;
        auto edges = h.edges();
        std::vector<Vertex> image(t);
        std::vector<bool> used(n, false);
        std::function<bool(std::size_t)> place = [&](std::size_t x) -> bool {
            if (x == t)
                return std::all_of(edges.begin(), edges.end(), [&](auto & e) { return adj(image[e.first], image[e.second]); });
            for (Vertex v = 0; v < n; ++v)
                if (! used[v])
                {
                    used[v] = true;
                    image[x] = v;
                    if (place(x + 1))
                        return true;
                    used[v] = false;
                }
            return false;
        };
        return place(0);
    }

    inline auto has_mono_copy(const Coloring & c, const Graph & h, Color color) -> bool
    {
        return has_copy(h, c.order(), [&](Vertex u, Vertex v) { return c.color(u, v) == color; });
    }

    /// Every colouring of K_n as a bit mask over lexicographic pairs.
    inline auto coloring_from_mask(std::size_t n, std::uint64_t mask) -> Coloring
    {
        std::vector<rdense::Edge> red;
        std::size_t i = 0;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v, ++i)
                if ((mask >> i) & 1)
                    red.emplace_back(u, v);
        return Coloring(Graph::from_edges(n, red));
    }

    /// Smallest n <= n_max with every colouring containing blue h1 or red h2,
    /// by brute force over all 2^C(n,2) colourings; 0 if none.
    inline auto ramsey_brute(const Graph & h1, const Graph & h2, std::size_t n_max) -> std::size_t
    {
        for (std::size_t n = 1; n <= n_max; ++n)
        {
            std::uint64_t pairs = n * (n - 1) / 2;
            bool all = true;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs) && all; ++mask)
            {
                auto c = coloring_from_mask(n, mask);
                if (! has_mono_copy(c, h1, Color::Blue) && ! has_mono_copy(c, h2, Color::Red))
                    all = false;
            }
            if (all)
                return n;
        }
        return 0;
    }

    inline auto edges_between(const Graph & g, const std::vector<Vertex> & x, const std::vector<Vertex> & y) -> std::size_t
    {
        std::size_t e = 0;
        for (auto a : x)
            for (auto b : y)
                e += g.adjacent(a, b);
        return e;
    }

    inline auto is_clique(const Graph & g, const std::vector<Vertex> & vs) -> bool
    {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (vs[i] == vs[j] || ! g.adjacent(vs[i], vs[j]))
                    return false;
        return true;
    }

    inline auto is_embedding(const Graph & h, const Graph & host, const std::vector<Vertex> & image) -> bool
    {
        if (image.size() != h.order())
            return false;
        auto sorted = image;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return false;
        for (auto [a, b] : h.edges())
            if (image[a] >= host.order() || image[b] >= host.order() || ! host.adjacent(image[a], image[b]))
                return false;
        return true;
    }

    inline auto log2_choose(std::uint64_t n, std::uint64_t k) -> double
    {
        return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) / std::log(2.0);
    }
}
