#include "doctest.h"
#include "reference.hpp"

#include "rdense/graph.hpp"
#include "rdense/graph_io.hpp"
#include "rdense/random_lab.hpp"
#include "rdense/rng.hpp"

using namespace rdense;

TEST_CASE("density_pair")
{
    SUBCASE("complete and empty hosts")
    {
        std::vector<Vertex> x{0, 2}, y{1, 4, 5};
        CHECK(density_pair(Graph::complete(6), x, y) == Rational(1));
        CHECK(density_pair(Graph::empty(6), x, y) == Rational(0));
    }
    SUBCASE("4-cycle across its bipartition")
    {
        std::vector<Vertex> x{0, 2}, y{1, 3};
        CHECK(density_pair(Graph::cycle(4), x, y) == Rational(1));
    }
    SUBCASE("colour classes")
    {
        auto c = Coloring(Graph::cycle(5));
        std::vector<Vertex> x{0}, y{1, 2};
        CHECK(density_pair(c, Color::Red, x, y) == Rational(1, 2));
        CHECK(density_pair(c, Color::Blue, x, y) == Rational(1, 2));
    }
    SUBCASE("errors")
    {
        std::vector<Vertex> empty, a{0, 1}, b{1, 2};
        CHECK_THROWS_AS(density_pair(Graph::complete(4), empty, a), std::invalid_argument);
        CHECK_THROWS_AS(density_pair(Graph::complete(4), a, b), std::invalid_argument);
    }
    SUBCASE("symmetric and equal to the mean over equal-size sub-pairs")
    {
        auto g = random_lab::sample_gnp(12, 0.4, 3);
        std::vector<Vertex> x{0, 1, 2, 3}, y{6, 7, 8};
        CHECK(density_pair(g, x, y) == density_pair(g, y, x));
        // mean over all 2x2 sub-pairs
        Rational total(0);
        std::int64_t count = 0;
        for (std::size_t a = 0; a < x.size(); ++a)
            for (std::size_t b = a + 1; b < x.size(); ++b)
                for (std::size_t c = 0; c < y.size(); ++c)
                    for (std::size_t d = c + 1; d < y.size(); ++d)
                    {
                        std::vector<Vertex> xs{x[a], x[b]}, ys{y[c], y[d]};
                        total += density_pair(g, xs, ys);
                        ++count;
                    }
        CHECK(total / count == density_pair(g, x, y));
        CHECK(density_pair(g, x, y) == Rational(static_cast<std::int64_t>(ref::edges_between(g, x, y)), 12));
    }
}

TEST_CASE("graph_stats")
{
    auto k4 = graph_stats(Graph::complete(4));
    CHECK(k4.t == 4);
    CHECK(k4.m == 6);
    CHECK(k4.density == Rational(1));
    CHECK(k4.max_degree == 3);
    CHECK(k4.isolated_free);

    auto e5 = graph_stats(Graph::empty(5));
    CHECK(e5.m == 0);
    CHECK(e5.density == Rational(0));
    CHECK(e5.max_degree == 0);
    CHECK_FALSE(e5.isolated_free);

    auto c5 = graph_stats(Graph::cycle(5));
    CHECK(c5.m == 5);
    CHECK(c5.density == Rational(1, 2));
    CHECK(c5.max_degree == 2);
    CHECK(c5.isolated_free);

    CHECK_THROWS_AS(graph_stats(Graph::empty(1)), std::invalid_argument);

    for (std::uint64_t seed = 0; seed < 20; ++seed)
    {
        auto g = random_lab::sample_gnp(5 + seed, 0.3, seed);
        auto s = graph_stats(g);
        CHECK(s.density * choose2(static_cast<std::int64_t>(s.t)) == Rational(static_cast<std::int64_t>(s.m)));
    }
}

TEST_CASE("graph construction")
{
    std::vector<Edge> loop{{1, 1}}, dup{{0, 1}, {1, 0}}, far{{0, 3}};
    CHECK_THROWS_AS(Graph::from_edges(3, loop), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, dup), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, far), std::invalid_argument);

    auto p = Graph::path(4);
    CHECK(p.edge_count() == 3);
    CHECK(p.adjacent(2, 1));
    CHECK_FALSE(p.adjacent(0, 2));
    CHECK(p.complement().edge_count() == 3);
    std::vector<Vertex> keep{3, 2, 0};
    auto sub = p.induced(keep);
    CHECK(sub.order() == 3);
    CHECK(sub.edge_count() == 1);
    CHECK(sub.adjacent(0, 1));

    auto c = Coloring::all(4, Color::Blue);
    CHECK(c.graph(Color::Blue).edge_count() == 6);
    CHECK(c.color(0, 3) == Color::Blue);

    BoundedGraphWitness ok{2, {0}};
    std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
    auto s = Graph::from_edges(4, star);
    CHECK_NOTHROW(validate_witness(s, ok));
    BoundedGraphWitness bad{2, {}};
    CHECK_THROWS_AS(validate_witness(s, bad), std::invalid_argument);
}

TEST_CASE("graph text format")
{
    auto g = parse_graph("t 3 m 2\n0 1\n1 2\n");
    CHECK(g == Graph::path(3));
    CHECK(graph_stats(g).density == Rational(2, 3));

    CHECK_THROWS_AS(parse_graph("t 2 m 1\n0 0\n"), ParseError);
    try
    {
        parse_graph("t 3 m 2\n0 1\n1 3\n");
        FAIL("expected a parse error");
    }
    catch (const ParseError & e)
    {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_graph("t 3 m 2\n0 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("t 3 m 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("t 3 m 1\n0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("t 3\n"), ParseError);

    for (std::uint64_t seed = 0; seed < 10; ++seed)
    {
        auto h = random_lab::sample_gnp(9, 0.5, seed);
        auto text = serialize_graph(h);
        CHECK(parse_graph(text) == h);
        CHECK(serialize_graph(parse_graph(text)) == text);
    }
    CHECK(serialize_graph(Graph::path(3)) == "t 3 m 2\n0 1\n1 2\n");
}

TEST_CASE("coloring text formats")
{
    auto pent = Coloring(Graph::cycle(5));
    auto list = serialize_coloring(pent, ColoringFormat::PairList);
    auto hex = serialize_coloring(pent, ColoringFormat::Hex);
    CHECK(parse_coloring(list) == pent);
    CHECK(parse_coloring(hex) == pent);
    // pairs 01 02 03 04 12 13 14 23 24 34 -> RBBR RBBR BR, padded to 12 bits
    CHECK(hex == "n 5 hex 994\n");
    CHECK(list.rfind("n 5\n0 1 R\n0 2 B\n", 0) == 0);

    CHECK_THROWS_AS(parse_coloring("n 3 hex f\n"), ParseError);
    CHECK_THROWS_AS(parse_coloring("n 3\n0 1 R\n1 2 B\n0 2 R\n"), ParseError);
    CHECK_THROWS_AS(parse_coloring("n 3\n0 1 R\n0 2 G\n1 2 B\n"), ParseError);

    for (std::uint64_t seed = 0; seed < 10; ++seed)
    {
        auto c = random_lab::sample_coloring(3 + seed, 0.5, seed);
        CHECK(parse_coloring(serialize_coloring(c, ColoringFormat::Hex)) == c);
        CHECK(parse_coloring(serialize_coloring(c, ColoringFormat::PairList)) == c);
    }
    CHECK(parse_coloring(serialize_coloring(Coloring::all(1, Color::Red), ColoringFormat::Hex)).order() == 1);
}

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("1/16") == Rational(1, 16));
    CHECK(parse_rational("0.0625") == Rational(1, 16));
    CHECK(parse_rational("1e-2") == Rational(1, 100));
    CHECK(parse_rational("3") == Rational(3));
    CHECK_THROWS(parse_rational("abc"));
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("generator snapshot")
{
    Rng r(0);
    // splitmix64 reference outputs for seed 0
    CHECK(r.next_u64() == 0xe220a8397b1dcdafull);
    CHECK(r.next_u64() == 0x6e789e6aa1b965f4ull);
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    Rng b(7);
    for (int i = 0; i < 1000; ++i)
        CHECK(b.below(10) < 10);
}
