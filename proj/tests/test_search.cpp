#include "doctest.h"
#include "reference.hpp"

#include "rdense/oracle.hpp"
#include "rdense/random_lab.hpp"
#include "rdense/rng.hpp"
#include "rdense/search.hpp"

using namespace rdense;
using namespace rdense::search;

namespace
{
    auto set_of(std::size_t n, std::vector<Vertex> vs) { return Bitset::from(n, vs); }

    /// Coloring of K_n where pairs across (A, B) are blue with probability p and
    /// everything else is uniform.
    auto planted(std::size_t n, const Bitset & a, const Bitset & b, double p_blue, std::uint64_t seed) -> Coloring
    {
        Rng rng(seed);
        std::vector<Edge> red;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
            {
                bool across = (a.test(u) && b.test(v)) || (a.test(v) && b.test(u));
                if (! rng.bernoulli(across ? p_blue : 0.5))
                    red.emplace_back(u, v);
            }
        return Coloring(Graph::from_edges(n, red));
    }
}

TEST_CASE("neighbourhood chase")
{
    auto red = Coloring::all(10, Color::Red);
    auto c = neighborhood_chase(red, Bitset::full(10), 0.5, 3, 3);
    CHECK(c.letter_string() == "RRR");
    CHECK(c.final_set().count() == 7);
    CHECK(check_chase(red, c, 3, 3).empty());

    auto blue = Coloring::all(10, Color::Blue);
    auto b = neighborhood_chase(blue, Bitset::full(10), 0.5, 5, 2);
    CHECK(b.letter_string() == "BB");
    CHECK(b.final_set().count() == 8);

    auto pent = Coloring(Graph::cycle(5));
    auto p = neighborhood_chase(pent, Bitset::full(5), 0.5, 1, 1);
    CHECK(p.letter_string() == "R");
    CHECK(p.final_set() == set_of(5, {1, 4}));
    CHECK(p.pivots == std::vector<Vertex>{0});

    auto empty = neighborhood_chase(pent, Bitset(5), 0.5, 2, 2);
    CHECK(empty.pivots.empty());

    // a tampered trace is rejected
    auto bad = c;
    bad.letters[1] = Color::Blue;
    CHECK_FALSE(check_chase(red, bad, 3, 3).empty());
    auto early = c;
    early.pivots.pop_back();
    early.letters.pop_back();
    early.sets.pop_back();
    CHECK_FALSE(check_chase(red, early, 3, 3).empty());

    for (std::uint64_t seed = 0; seed < 200; ++seed)
    {
        auto col = random_lab::sample_coloring(30, 0.5, seed);
        double threshold = seed % 2 ? 0.5 : 0.2;
        auto ch = neighborhood_chase(col, Bitset::full(30), threshold, 4, 6);
        CHECK(check_chase(col, ch, 4, 6).empty());
        for (auto colour : {Color::Red, Color::Blue})
        {
            auto piv = ch.pivots_with(colour);
            CHECK(ref::is_clique(col.graph(colour), piv));
        }
    }
}

TEST_CASE("high blue degree filter")
{
    auto blue = Coloring::all(10, Color::Blue);
    auto a = set_of(10, {0, 1, 2}), b = set_of(10, {5, 6, 7, 8});
    CHECK(filter_high_blue_degree(blue, a, b, 0.1) == a);
    CHECK(filter_high_blue_degree(Coloring::all(10, Color::Red), a, b, 0.1).none());
    CHECK_THROWS_AS(filter_high_blue_degree(blue, a, a, 0.1), std::invalid_argument);

    std::size_t premise = 0;
    Rng rng(1);
    for (std::uint64_t i = 0; i < 1000; ++i)
    {
        double rho = 0.02 + 0.1 * rng.uniform();
        auto aa = Bitset::full(40) , bb = Bitset(40);
        for (Vertex v = 20; v < 40; ++v)
        {
            aa.reset(v);
            bb.set(v);
        }
        auto col = planted(40, aa, bb, 1.0 - rho * rng.uniform(), rng.next_u64());
        auto blue_edges = edges_between(col.graph(Color::Blue), aa, bb);
        if (static_cast<double>(blue_edges) < (1.0 - rho) * 400)
            continue;
        ++premise;
        CHECK(static_cast<double>(filter_high_blue_degree(col, aa, bb, rho).count()) >= rho * 20);
    }
    CHECK(premise > 500);

    std::size_t nonempty = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed)
    {
        auto aa = Bitset(40), bb = Bitset(40);
        for (Vertex v = 0; v < 20; ++v)
        {
            aa.set(v);
            bb.set(20 + v);
        }
        auto col = planted(40, aa, bb, 0.95, seed);
        auto blue_density = static_cast<double>(edges_between(col.graph(Color::Blue), aa, bb)) / 400;
        auto kept = filter_high_blue_degree(col, aa, bb, 0.05).count();
        if (blue_density >= 0.95)
            CHECK(kept >= 1);
        nonempty += kept >= 1;
    }
    CHECK(nonempty >= 45);
}

TEST_CASE("common neighbourhood pigeonhole")
{
    auto blue = Coloring::all(12, Color::Blue);
    std::vector<Vertex> s{0, 1, 2};
    auto b = set_of(12, {5, 6, 7});
    auto all = common_neighborhood_pigeonhole(blue, s, b, 3, Color::Blue, PigeonholeMode::Exact);
    CHECK(all.t == s);
    CHECK(all.common == b);
    auto none = common_neighborhood_pigeonhole(Coloring::all(12, Color::Red), s, b, 1, Color::Blue, PigeonholeMode::Greedy);
    CHECK(none.common.none());
    CHECK_THROWS_AS(common_neighborhood_pigeonhole(blue, s, b, 4, Color::Blue, PigeonholeMode::Exact), std::invalid_argument);
    std::vector<Vertex> big(30);
    for (Vertex i = 0; i < 30; ++i)
        big[i] = i;
    CHECK_THROWS_AS(common_neighborhood_pigeonhole(Coloring::all(40, Color::Blue), big, Bitset(40), 15, Color::Blue,
                                                   PigeonholeMode::Exact, 1000),
                    std::invalid_argument);
    auto zero = common_neighborhood_pigeonhole(blue, s, b, 0, Color::Blue, PigeonholeMode::Greedy);
    CHECK(zero.t.empty());
    CHECK(zero.common == b);

    std::size_t good = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed)
    {
        auto col = random_lab::sample_coloring(14, 0.1, seed);
        std::vector<Vertex> ss{0, 1, 2, 3, 4, 5};
        auto bb = set_of(14, {6, 7, 8, 9, 10, 11, 12, 13});
        auto exact = common_neighborhood_pigeonhole(col, ss, bb, 3, Color::Blue, PigeonholeMode::Exact);
        auto greedy = common_neighborhood_pigeonhole(col, ss, bb, 3, Color::Blue, PigeonholeMode::Greedy);
        for (auto * r : {&exact, &greedy})
        {
            CHECK(r->t.size() == 3);
            for (auto v : r->common.to_vector())
                for (auto x : r->t)
                    CHECK(col.color(v, x) == Color::Blue);
        }
        CHECK(greedy.common.count() <= exact.common.count());
        good += static_cast<double>(greedy.common.count()) >= 0.8 * static_cast<double>(exact.common.count());
    }
    MESSAGE("greedy within 0.8 of exact on " << good << " of 100 seeds");
    CHECK(good >= 90);
}

TEST_CASE("high degree split")
{
    auto c6 = Graph::cycle(6);
    CHECK(split_high_degree(c6, 2).removed.empty());
    std::vector<Edge> star;
    for (Vertex v = 1; v < 10; ++v)
        star.emplace_back(0, v);
    auto s = split_high_degree(Graph::from_edges(10, star), 5);
    CHECK(s.removed == std::vector<Vertex>{0});
    CHECK(s.reduced.order() == 9);
    CHECK(s.reduced.edge_count() == 0);
    CHECK_THROWS_AS(split_high_degree(c6, 0), std::invalid_argument);
    for (std::uint64_t seed = 0; seed < 100; ++seed)
    {
        auto g = random_lab::sample_gnp(100, 0.1, seed);
        auto r = split_high_degree(g, 20);
        CHECK(static_cast<double>(r.removed.size()) <= 2.0 * static_cast<double>(g.edge_count()) / 20);
        for (double cap : {1.0, 3.5, 7.0})
            CHECK(static_cast<double>(split_high_degree(g, cap).removed.size()) <= 2.0 * static_cast<double>(g.edge_count()) / cap);
    }
}

TEST_CASE("red H or blue clique")
{
    SearchConfig config;
    auto k3 = Graph::complete(3);
    for (std::size_t s : {1, 3, 7})
    {
        auto r = find_red_H_or_blue_clique(Coloring::all(12, Color::Red), k3, s, config);
        CHECK(r.kind == OutcomeKind::FoundRedH);
        CHECK(ref::is_embedding(k3, Coloring::all(12, Color::Red).graph(Color::Red), r.embedding->image));
    }
    for (std::size_t s : {1, 5, 12})
    {
        auto r = find_red_H_or_blue_clique(Coloring::all(12, Color::Blue), k3, s, config);
        CHECK(r.kind == OutcomeKind::FoundBlueClique);
        CHECK(r.clique.size() == s);
        CHECK(ref::is_clique(Coloring::all(12, Color::Blue).graph(Color::Blue), r.clique));
    }
    auto pent = find_red_H_or_blue_clique(Coloring(Graph::cycle(5)), k3, 3, config);
    CHECK(pent.kind == OutcomeKind::Exhausted);
    CHECK_FALSE(pent.trace.reason.empty());
    CHECK_THROWS_AS(find_red_H_or_blue_clique(Coloring::all(4, Color::Red), k3, 0, config), std::invalid_argument);

    // large s forces the sparse-pair recursion
    config.base_s = 2;
    config.base_enum_cap = 10;
    auto a = Bitset(60), b = Bitset(60);
    for (Vertex v = 0; v < 30; ++v)
    {
        a.set(v);
        b.set(30 + v);
    }
    auto col = planted(60, a, b, 0.97, 4);
    auto r = find_red_H_or_blue_clique(col, Graph::complete(6), 6, config);
    CHECK(verify_outcome(col, Graph::complete(6), 6, r).empty());
    bool recursed = false;
    for (auto & e : r.trace.events)
        recursed = recursed || e.kind == "sparse-pair";
    MESSAGE("outcome " << std::string(outcome_name(r.kind)) << " after " << r.trace.nodes << " nodes");
    CHECK(recursed);
}

TEST_CASE("monochromatic H")
{
    SearchConfig config;
    auto k2 = Graph::complete(2);
    for (auto c : {Color::Red, Color::Blue})
    {
        auto r = find_mono_H(Coloring::all(2, c), k2, config);
        CHECK(r.kind == OutcomeKind::FoundMono);
        CHECK(r.color == c);
    }
    auto p3 = Graph::path(3);
    for (std::uint64_t mask = 0; mask < 8; ++mask)
    {
        auto col = ref::coloring_from_mask(3, mask);
        auto r = find_mono_H(col, p3, config);
        REQUIRE(r.kind == OutcomeKind::FoundMono);
        CHECK(ref::is_embedding(p3, col.graph(r.color), r.embedding->image));
    }
    auto pent = find_mono_H(Coloring(Graph::cycle(5)), Graph::complete(3), config);
    CHECK(pent.kind == OutcomeKind::Exhausted);
    REQUIRE(pent.trace.chases.size() == 1);
    CHECK(check_chase(Coloring(Graph::cycle(5)), pent.trace.chases[0], 3, 3).empty());

    auto edgeless = find_mono_H(Coloring::all(4, Color::Blue), Graph::empty(3), config);
    CHECK(edgeless.kind == OutcomeKind::FoundMono);
    CHECK(find_mono_H(Coloring::all(2, Color::Blue), Graph::empty(3), config).kind == OutcomeKind::Exhausted);

    // big enough host: the chase pivots carry the stripped vertices
    auto red = Coloring::all(40, Color::Red);
    std::vector<Edge> star;
    for (Vertex v = 1; v < 8; ++v)
        star.emplace_back(0, v);
    auto r = find_mono_H(red, Graph::from_edges(8, star), config);
    CHECK(r.kind == OutcomeKind::FoundMono);
}

TEST_CASE("searches never find what is not there")
{
    auto k3 = Graph::complete(3);
    SearchConfig config;
    std::size_t avoiding = 0;
    for (std::uint64_t mask = 0; mask < 1024; ++mask)
    {
        auto col = ref::coloring_from_mask(5, mask);
        bool red = ref::has_mono_copy(col, k3, Color::Red), blue = ref::has_mono_copy(col, k3, Color::Blue);
        auto mono = find_mono_H(col, k3, config);
        auto vs = find_red_H_or_blue_clique(col, k3, 3, config);
        if (! red && ! blue)
        {
            ++avoiding;
            CHECK(mono.kind == OutcomeKind::Exhausted);
            CHECK(vs.kind == OutcomeKind::Exhausted);
        }
        // at n = 5 the exhaustive pass makes the mono search complete
        CHECK(mono.found() == (red || blue));
        CHECK(verify_outcome(col, k3, 3, vs).empty());
    }
    CHECK(avoiding == 12);
}

TEST_CASE("random graph search")
{
    SearchConfig config;
    config.l_rule = LRule::RandomGraph;
    auto h = random_lab::sample_gnp(8, 0.3, 2);
    BoundedGraphWitness w{h.max_degree(), {}};
    auto r = find_random_graph_mono(Coloring::all(50, Color::Red), h, w, config);
    CHECK(r.kind == OutcomeKind::FoundMono);
    CHECK(r.color == Color::Red);

    BoundedGraphWitness wrong{0, {}};
    CHECK_THROWS_AS(find_random_graph_mono(Coloring::all(50, Color::Red), Graph::complete(3), wrong, config), std::invalid_argument);

    // every vertex exceptional: success exactly when a chase produces K_t
    auto k4 = Graph::complete(4);
    BoundedGraphWitness all{0, {0, 1, 2, 3}};
    for (std::uint64_t seed = 0; seed < 30; ++seed)
    {
        auto col = random_lab::sample_coloring(12, 0.5, seed);
        config.rho = 0.3;
        auto out = find_random_graph_mono(col, k4, all, config);
        auto first = neighborhood_chase(col, Bitset::full(12), 0.3, 4, 3);
        bool chase_clique = first.count(Color::Red) == 4 || (first.count(Color::Blue) == 3 && ! first.final_set().none());
        CHECK(out.found() == chase_clique);
        CHECK(verify_outcome(col, k4, 0, out).empty());
    }

    config.rho = 0.4;
    auto h12 = random_lab::sample_gnp(12, 0.4, 7);
    std::size_t found = 0;
    for (std::uint64_t seed = 0; seed < 5; ++seed)
    {
        auto col = random_lab::sample_coloring(300, 0.5, seed);
        BoundedGraphWitness bw{h12.max_degree(), {}};
        auto out = find_random_graph_mono(col, h12, bw, config);
        CHECK(verify_outcome(col, h12, 0, out).empty());
        found += out.found();
    }
    MESSAGE("random-graph search found " << found << " of 5");
}

TEST_CASE("search determinism")
{
    auto col = random_lab::sample_coloring(40, 0.5, 8);
    SearchConfig config;
    config.seed = 3;
    auto h = Graph::cycle(5);
    auto a = find_mono_H(col, h, config), b = find_mono_H(col, h, config);
    CHECK(a.kind == b.kind);
    CHECK(a.trace.nodes == b.trace.nodes);
    CHECK(a.trace.events.size() == b.trace.events.size());
    if (a.embedding)
        CHECK(a.embedding->image == b.embedding->image);
    auto c = find_red_H_or_blue_clique(col, h, 5, config), d = find_red_H_or_blue_clique(col, h, 5, config);
    CHECK(c.kind == d.kind);
    CHECK(c.clique == d.clique);
}
