#pragma once

#include "rdense/graph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

// Closed-form Ramsey bounds for graphs of given order and density, all in the
// log2 domain. Out-of-range parameters are not errors: the value is still
// computed and the failing precondition is reported as a flag.
namespace rdense::bounds
{
    enum class TheoremId
    {
        MainDense,
        CliqueMaxDeg,
        CliqueDense,
        EdgesForm,
        RandomGraph,
        BaseCaseBinomial,
        InductionStep,
        LowerCliquePlant,
        LowerRandomEdges
    };

    /// CLI spelling, e.g. "main-dense".
    auto theorem_name(TheoremId id) -> std::string;
    auto parse_theorem(const std::string & name) -> std::optional<TheoremId>;

    struct Flag
    {
        std::string name;
        bool passed;
    };

    struct Params
    {
        std::optional<std::int64_t> t;
        std::optional<Rational> rho;
        std::optional<std::int64_t> m;
        std::optional<std::int64_t> s;
    };

    struct BoundReport
    {
        TheoremId theorem;
        Params params;
        double log2_bound = 0.0;
        std::vector<Flag> flags;
        /// Auxiliary named values (chain values, substitutions, registry entries).
        std::vector<std::pair<std::string, double>> extras;
        std::string note;

        auto preconditions_met() const -> bool;
    };

    /// Constant for the random-edges lower bound form c·ρ·t; existence-only in
    /// the literature, pinned here.
    inline constexpr double lower_random_constant = 0.25;

    /// 15·√ρ·log2(2/ρ)·t, flag ρ ≤ 1/16.
    auto main_dense(std::int64_t t, Rational rho) -> BoundReport;
    /// 12·ρ·log2²(2/ρ)·t for K_t versus H of maximum degree ρt, flag ρ ≤ 1/16.
    auto clique_maxdeg(std::int64_t t, Rational rho) -> BoundReport;
    /// 15·√ρ·log2^{3/2}(2/ρ)·t for K_t versus H of density ρ, flag ρ ≤ 1/50.
    auto clique_dense(std::int64_t t, Rational rho) -> BoundReport;
    /// main_dense evaluated at ρ = m / C(t,2).
    auto edges_form(std::int64_t m, std::int64_t t) -> BoundReport;
    /// 1100·ρ·log2(2/ρ)·t for random H.
    auto random_graph(std::int64_t t, Rational rho) -> BoundReport;
    /// log2 C(s+t, s), plus the chain value 2ρt·log2(2/ρ) at ρ = s/t.
    auto base_case(std::int64_t s, std::int64_t t) -> BoundReport;
    /// 12·ρ·log2(2/ρ)·t·log2(2s/(ρt)).
    auto induction_step(std::int64_t s, std::int64_t t, Rational rho) -> BoundReport;
    /// (planted clique √ρ·t/4, random edges c·ρ·t).
    auto lower_bounds(std::int64_t t, Rational rho) -> std::pair<BoundReport, BoundReport>;

    /// Lower bound on the density at which the random-graph bound applies:
    /// 2^15·(log2 t)^{3/2} / √t.
    auto random_graph_threshold(std::int64_t t) -> double;
}
