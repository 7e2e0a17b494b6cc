#include "doctest.h"
#include "reference.hpp"

#include "rdense/bounds.hpp"
#include "rdense/oracle.hpp"
#include "rdense/rng.hpp"

#include <cmath>

using namespace rdense;
using namespace rdense::bounds;

namespace
{
    auto flag(const BoundReport & r, const std::string & name) -> bool
    {
        for (auto & f : r.flags)
            if (f.name == name)
                return f.passed;
        FAIL("missing flag " << name);
        return false;
    }
}

TEST_CASE("main dense bound")
{
    CHECK(main_dense(64, Rational(1, 16)).log2_bound == doctest::Approx(1200).epsilon(1e-12));
    auto r = main_dense(2, Rational(1));
    CHECK(r.log2_bound == doctest::Approx(30).epsilon(1e-12));
    CHECK_FALSE(flag(r, "rho_le_1_16"));
    CHECK(main_dense(100, Rational(1, 64)).log2_bound == doctest::Approx(1312.5).epsilon(1e-12));
    CHECK(flag(main_dense(64, Rational(1, 16)), "rho_le_1_16"));
    CHECK_THROWS_AS(main_dense(10, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(main_dense(1, Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("clique bounds")
{
    CHECK(clique_maxdeg(16, Rational(1, 16)).log2_bound == doctest::Approx(300).epsilon(1e-12));
    auto half = clique_maxdeg(1000, Rational(1, 2));
    CHECK(half.log2_bound == doctest::Approx(24000).epsilon(1e-12));
    CHECK_FALSE(flag(half, "rho_le_1_16"));

    auto d = clique_dense(50, Rational(1, 50));
    CHECK(d.log2_bound == doctest::Approx(15 * std::sqrt(0.02) * std::pow(std::log2(100.0), 1.5) * 50).epsilon(1e-12));
    CHECK(flag(d, "rho_le_1_50"));
    auto h = clique_dense(10, Rational(1, 2));
    CHECK(h.log2_bound == doctest::Approx(15 * std::sqrt(0.5) * std::pow(2.0, 1.5) * 10).epsilon(1e-12));
    CHECK_FALSE(flag(h, "rho_le_1_50"));

    Rng rng(11);
    for (int i = 0; i < 200; ++i)
    {
        auto t = static_cast<std::int64_t>(2 + rng.below(500));
        auto rho = Rational(static_cast<std::int64_t>(1 + rng.below(64)), 1024);
        CHECK(clique_dense(t, rho).log2_bound >= main_dense(t, rho).log2_bound);
        for (auto f : {main_dense, clique_maxdeg, clique_dense, random_graph})
            CHECK(f(2 * t, rho).log2_bound == doctest::Approx(2 * f(t, rho).log2_bound).epsilon(1e-12));
    }
}

TEST_CASE("edges form substitution")
{
    CHECK(edges_form(6, 4).log2_bound == main_dense(4, Rational(1)).log2_bound);
    CHECK(edges_form(45, 10).log2_bound == main_dense(10, Rational(1)).log2_bound);
    CHECK(edges_form(45, 10).theorem == TheoremId::EdgesForm);
    CHECK_THROWS_AS(edges_form(0, 10), std::invalid_argument);
    CHECK_THROWS_AS(edges_form(46, 10), std::invalid_argument);
    Rng rng(5);
    for (int i = 0; i < 100; ++i)
    {
        auto t = static_cast<std::int64_t>(2 + rng.below(300));
        auto m = static_cast<std::int64_t>(1 + rng.below(static_cast<std::uint64_t>(choose2(t))));
        CHECK(edges_form(m, t).log2_bound == main_dense(t, Rational(m, choose2(t))).log2_bound);
    }
}

TEST_CASE("random graph bound")
{
    auto r = random_graph(1'000'000, Rational(1, 100));
    CHECK(r.log2_bound == doctest::Approx(1100 * 0.01 * std::log2(200.0) * 1e6).epsilon(1e-12));
    // the density threshold exceeds 1/100 at desk scale
    auto desk = random_graph(10'000, Rational(1, 100));
    CHECK(2 * 16384 * std::pow(std::log2(1e4), 1.5) / 100 > 0.01);
    CHECK_FALSE(flag(desk, "rho_ge_threshold"));
    CHECK_FALSE(desk.note.empty());
    for (int k = 1; k <= 100; ++k)
        CHECK_FALSE(flag(random_graph(10'000, Rational(k, 10'000)), "rho_ge_threshold"));
    auto half = random_graph(100, Rational(1, 2));
    CHECK_FALSE(flag(half, "rho_ge_threshold"));
    CHECK_FALSE(flag(half, "rho_le_1_100"));
    CHECK(half.log2_bound == doctest::Approx(1100 * 0.5 * 2 * 100).epsilon(1e-12));
}

TEST_CASE("base case and induction step")
{
    CHECK(base_case(2, 2).log2_bound == doctest::Approx(std::log2(6.0)).epsilon(1e-12));
    CHECK(base_case(0, 7).log2_bound == 0.0);
    CHECK(base_case(3, 3).log2_bound == doctest::Approx(std::log2(20.0)).epsilon(1e-12));
    CHECK(base_case(40, 60).log2_bound == doctest::Approx(ref::log2_choose(100, 40)).epsilon(1e-9));
    auto k3 = Graph::complete(3);
    auto cert = oracle::ramsey_number_exact(k3, k3, 8);
    REQUIRE(cert.value);
    CHECK(std::log2(static_cast<double>(*cert.value)) <= base_case(3, 3).log2_bound);

    auto rho = Rational(1, 16);
    for (std::int64_t t : {16, 64, 160})
    {
        auto at_t = induction_step(t, t, rho);
        CHECK(at_t.log2_bound == doctest::Approx(clique_maxdeg(t, rho).log2_bound).epsilon(1e-12));
        auto s0 = t / 16;
        CHECK(induction_step(s0, t, rho).log2_bound == doctest::Approx(12 * (1.0 / 16) * 5 * t).epsilon(1e-12));
        double prev = -1;
        for (auto s = s0; s <= t; ++s)
        {
            auto v = induction_step(s, t, rho).log2_bound;
            CHECK(v > prev);
            prev = v;
        }
    }
    CHECK_FALSE(flag(induction_step(1, 160, rho), "s_ge_rho_t"));
}

TEST_CASE("lower bounds")
{
    auto [plant, random] = lower_bounds(16, Rational(1, 4));
    CHECK(plant.log2_bound == doctest::Approx(2).epsilon(1e-12));
    CHECK(random.log2_bound == doctest::Approx(0.25 * 0.25 * 16).epsilon(1e-12));
    auto [p100, r100] = lower_bounds(100, Rational(1));
    CHECK(p100.log2_bound == doctest::Approx(25).epsilon(1e-12));
    bool found = false;
    for (auto & [k, v] : p100.extras)
        if (k == "complete_graph_lower_log2")
        {
            found = true;
            CHECK(v == doctest::Approx(50));
        }
    CHECK(found);
    for (int k = 1; k <= 64; ++k)
    {
        auto rho = Rational(k, 64);
        CHECK(lower_bounds(40, rho).first.log2_bound <= main_dense(40, rho).log2_bound);
    }
}

TEST_CASE("theorem names round trip")
{
    for (auto id : {TheoremId::MainDense, TheoremId::CliqueMaxDeg, TheoremId::CliqueDense, TheoremId::EdgesForm,
                    TheoremId::RandomGraph, TheoremId::BaseCaseBinomial, TheoremId::InductionStep,
                    TheoremId::LowerCliquePlant, TheoremId::LowerRandomEdges})
        CHECK(parse_theorem(theorem_name(id)) == id);
    CHECK_FALSE(parse_theorem("nope"));
}
