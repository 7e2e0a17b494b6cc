#include "doctest.h"
#include "reference.hpp"

#include "rdense/embedder.hpp"
#include "rdense/oracle.hpp"
#include "rdense/random_lab.hpp"
#include "rdense/rng.hpp"

using namespace rdense;
using namespace rdense::embedder;

namespace
{
    /// Random graph with maximum degree at most `cap`: random edges, skipped when they would exceed it.
    auto bounded_degree_graph(std::size_t t, std::size_t cap, std::size_t attempts, std::uint64_t seed) -> Graph
    {
        Rng rng(seed);
        std::vector<std::size_t> deg(t, 0);
        std::vector<Edge> edges;
        std::vector<std::vector<bool>> seen(t, std::vector<bool>(t, false));
        for (std::size_t i = 0; i < attempts; ++i)
        {
            auto u = static_cast<Vertex>(rng.below(t)), v = static_cast<Vertex>(rng.below(t));
            if (u == v || seen[u][v] || deg[u] == cap || deg[v] == cap)
                continue;
            seen[u][v] = seen[v][u] = true;
            ++deg[u];
            ++deg[v];
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        return Graph::from_edges(t, edges);
    }
}

TEST_CASE("greedy partition")
{
    auto k4 = greedy_partition(Graph::complete(4), 4);
    REQUIRE(k4.ok);
    for (auto & p : k4.parts)
        CHECK(p.size() == 1);
    auto e = greedy_partition(Graph::empty(5), 1);
    REQUIRE(e.ok);
    CHECK(e.parts[0].size() == 5);
    auto c5 = greedy_partition(Graph::cycle(5), 3);
    REQUIRE(c5.ok);
    std::size_t covered = 0;
    for (auto & p : c5.parts)
    {
        CHECK(p.size() <= 2);
        covered += p.size();
        CHECK(ref::edges_between(Graph::cycle(5), p, p) == 0);
    }
    CHECK(covered == 5);
    auto fail = greedy_partition(Graph::complete(4), 3);
    CHECK_FALSE(fail.ok);
    CHECK(fail.stuck == Vertex{3});
}

TEST_CASE("lemma constants")
{
    CHECK(lemma_sigma(0.5, 2) == doctest::Approx(0.25 / 16));
    CHECK_THROWS_AS(lemma_sigma(0.5, 0), std::invalid_argument);
    auto c = host_size_check(64, 2, 2, 0.5);
    CHECK(c.part_size == 21);
    CHECK(c.part_size_sufficient);
    CHECK(c.order_sufficient);
    auto small = host_size_check(30, 2, 2, 0.5);
    CHECK_FALSE(small.part_size_sufficient);
    CHECK_FALSE(small.order_sufficient);
}

TEST_CASE("greedy embedding examples")
{
    auto edge = embed_greedy(Graph::complete(2), Graph::complete(10), 0.5);
    REQUIRE(edge.success());
    CHECK(Graph::complete(10).adjacent(edge.embedding->image[0], edge.embedding->image[1]));

    auto empty = embed_greedy(Graph::empty(3), Graph::empty(3), 0.5);
    REQUIRE(empty.success());
    CHECK(ref::is_embedding(Graph::empty(3), Graph::empty(3), empty.embedding->image));

    auto nothing = embed_greedy(Graph::complete(3), Graph::empty(30), 0.5);
    CHECK_FALSE(nothing.success());
    REQUIRE(nothing.failure);
    CHECK(nothing.failure->step == 0);

    CHECK_THROWS_AS(embed_greedy(Graph::complete(2), Graph::complete(4), 0.0), std::invalid_argument);
    EmbedOptions bad;
    bad.host_parts = std::vector<std::vector<Vertex>>{{0, 1}, {2}};
    CHECK_THROWS_AS(embed_greedy(Graph::complete(2), Graph::complete(4), 0.5, bad), std::invalid_argument);
    EmbedOptions custom;
    custom.host_parts = std::vector<std::vector<Vertex>>{{3, 1}, {0, 2}};
    auto r = embed_greedy(Graph::complete(2), Graph::complete(4), 0.5, custom);
    REQUIRE(r.success());
    CHECK(r.embedding->image == std::vector<Vertex>{1, 0});
}

TEST_CASE("greedy embedding into random hosts")
{
    std::size_t successes = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed)
    {
        auto h = bounded_degree_graph(10, 3, 40, seed);
        auto host = random_lab::sample_gnp(400, 0.5, 1000 + seed);
        auto r = embed_greedy(h, host, 0.3);
        if (r.success())
        {
            ++successes;
            CHECK(ref::is_embedding(h, host, r.embedding->image));
        }
        auto again = embed_greedy(h, host, 0.3);
        CHECK(again.success() == r.success());
        if (r.success())
            CHECK(again.embedding->image == r.embedding->image);
    }
    CHECK(successes == 50);
}

TEST_CASE("coloring host")
{
    auto c = Coloring(Graph::cycle(6));
    auto r = embed_greedy(Graph::path(2), c, Color::Blue, 0.1);
    REQUIRE(r.success());
    CHECK(c.color(r.embedding->image[0], r.embedding->image[1]) == Color::Blue);
}

TEST_CASE("exact bi-density")
{
    CHECK(check_bidense_exact(Graph::complete(10), 0.3, 1.0).status == BiDensityStatus::Certified);
    auto e = check_bidense_exact(Graph::empty(8), 0.25, 0.5);
    REQUIRE(e.status == BiDensityStatus::Witness);
    CHECK(e.witness->x == std::vector<Vertex>{0, 1});
    CHECK(e.witness->y == std::vector<Vertex>{2, 3});

    // K_{5,5} minus a perfect matching, sides {0..4} and {5..9}, i ~ 5+j iff i != j
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i)
        for (Vertex j = 0; j < 5; ++j)
            if (i != j)
                edges.emplace_back(i, 5 + j);
    auto g = Graph::from_edges(10, edges);
    auto w = check_bidense_exact(g, 0.2, 0.9);
    REQUIRE(w.status == BiDensityStatus::Witness);
    CHECK(w.part_size == 2);
    CHECK(ref::edges_between(g, w.witness->x, w.witness->y) < 0.9 * 4);
    CHECK(check_bidense_exact(Graph::complete(60), 0.25, 0.5, 1000).status == BiDensityStatus::TooLarge);

    // half sizes: no room for two disjoint parts
    CHECK(check_bidense_exact(Graph::empty(5), 0.6, 0.5).status == BiDensityStatus::Certified);
}

TEST_CASE("exact bi-density agrees with the all-sizes check")
{
    Rng rng(99);
    for (int i = 0; i < 60; ++i)
    {
        auto n = 4 + rng.below(9);
        auto g = random_lab::sample_gnp(n, 0.3 + 0.5 * rng.uniform(), rng.next_u64());
        for (double sigma : {1.0 / 6, 1.0 / 4, 1.0 / 3})
            for (double delta : {0.2, 0.5, 0.8})
            {
                auto a = check_bidense_exact(g, sigma, delta);
                auto b = oracle::check_bidense_bruteforce(g, sigma, delta);
                CHECK(a.status == b.status);
            }
    }
}

TEST_CASE("heuristic sparse pair")
{
    auto e = find_sparse_pair_heuristic(Graph::empty(20), 0.25, 0.1, 1, 0);
    REQUIRE(e);
    CHECK(e->x.size() == 5);
    CHECK_FALSE(find_sparse_pair_heuristic(Graph::complete(20), 0.25, 0.9, 5, 0));

    // planted sparse pair between two halves of size 50, dense elsewhere
    std::size_t found = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed)
    {
        Rng rng(seed);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < 200; ++u)
            for (Vertex v = u + 1; v < 200; ++v)
            {
                bool across = u < 50 && v >= 50 && v < 100;
                if (rng.bernoulli(across ? 0.05 : 0.5))
                    edges.emplace_back(u, v);
            }
        auto g = Graph::from_edges(200, edges);
        auto w = find_sparse_pair_heuristic(g, 0.25, 0.1, 100, seed);
        if (w)
        {
            ++found;
            CHECK(ref::edges_between(g, w->x, w->y) < 0.1 * w->x.size() * w->y.size());
            CHECK(w->x.size() >= 50);
        }
    }
    CHECK(found == 20);
}
