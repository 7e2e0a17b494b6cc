#include "rdense/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rdense::bounds
{
    namespace
    {
        const std::vector<std::pair<TheoremId, std::string>> names = {
            {TheoremId::MainDense, "main-dense"},
            {TheoremId::CliqueMaxDeg, "clique-maxdeg"},
            {TheoremId::CliqueDense, "clique-dense"},
            {TheoremId::EdgesForm, "edges-form"},
            {TheoremId::RandomGraph, "random-graph"},
            {TheoremId::BaseCaseBinomial, "base-case"},
            {TheoremId::InductionStep, "induction-step"},
            {TheoremId::LowerCliquePlant, "lower-plant"},
            {TheoremId::LowerRandomEdges, "lower-random"},
        };

        void check_args(std::int64_t t, const Rational & rho)
        {
            if (t < 2)
                throw std::invalid_argument("t must be at least 2");
            if (rho <= 0)
                throw std::invalid_argument("rho must be positive");
        }

        auto log2_two_over(const Rational & rho) -> double { return std::log2(2.0 / to_double(rho)); }

        auto report(TheoremId id, std::int64_t t, const Rational & rho) -> BoundReport
        {
            BoundReport r{id, {}, 0.0, {}, {}, {}};
            r.params.t = t;
            r.params.rho = rho;
            return r;
        }

        auto rho_at_most_one(const Rational & rho) -> Flag { return {"rho_le_1", rho <= 1}; }
    }

    auto theorem_name(TheoremId id) -> std::string
    {
        for (auto & [k, v] : names)
            if (k == id)
                return v;
        return "unknown";
    }

    auto parse_theorem(const std::string & name) -> std::optional<TheoremId>
    {
        for (auto & [k, v] : names)
            if (v == name)
                return k;
        return std::nullopt;
    }

    auto BoundReport::preconditions_met() const -> bool
    {
        return std::all_of(flags.begin(), flags.end(), [](const Flag & f) { return f.passed; });
    }

    auto main_dense(std::int64_t t, Rational rho) -> BoundReport
    {
        check_args(t, rho);
        auto r = report(TheoremId::MainDense, t, rho);
        r.log2_bound = 15.0 * std::sqrt(to_double(rho)) * log2_two_over(rho) * static_cast<double>(t);
        r.flags = {{"rho_le_1_16", rho <= Rational(1, 16)}, rho_at_most_one(rho)};
        return r;
    }

    auto clique_maxdeg(std::int64_t t, Rational rho) -> BoundReport
    {
        check_args(t, rho);
        auto r = report(TheoremId::CliqueMaxDeg, t, rho);
        auto l = log2_two_over(rho);
        r.log2_bound = 12.0 * to_double(rho) * l * l * static_cast<double>(t);
        r.flags = {{"rho_le_1_16", rho <= Rational(1, 16)}, rho_at_most_one(rho)};
        if (rho > Rational(1, 16))
            r.note = "no constant is established for rho > 1/16; formula reported with c = 12";
        return r;
    }

    auto clique_dense(std::int64_t t, Rational rho) -> BoundReport
    {
        check_args(t, rho);
        auto r = report(TheoremId::CliqueDense, t, rho);
        r.log2_bound = 15.0 * std::sqrt(to_double(rho)) * std::pow(log2_two_over(rho), 1.5) * static_cast<double>(t);
        r.flags = {{"rho_le_1_50", rho <= Rational(1, 50)}, rho_at_most_one(rho)};
        return r;
    }

    auto edges_form(std::int64_t m, std::int64_t t) -> BoundReport
    {
        if (t < 2)
            throw std::invalid_argument("t must be at least 2");
        if (m <= 0 || m > choose2(t))
            throw std::invalid_argument("m must lie in [1, C(t,2)]");
        Rational rho(m, choose2(t));
        auto r = main_dense(t, rho);
        r.theorem = TheoremId::EdgesForm;
        r.params.m = m;
        r.note = "rho = m / C(t,2) substituted into 15*sqrt(rho)*log2(2/rho)*t";
        r.extras.emplace_back("sqrt_m", std::sqrt(static_cast<double>(m)));
        return r;
    }

    auto random_graph_threshold(std::int64_t t) -> double
    {
        auto lt = std::log2(static_cast<double>(t));
        return std::ldexp(std::pow(lt, 1.5), 15) / std::sqrt(static_cast<double>(t));
    }

    auto random_graph(std::int64_t t, Rational rho) -> BoundReport
    {
        check_args(t, rho);
        auto r = report(TheoremId::RandomGraph, t, rho);
        r.log2_bound = 1100.0 * to_double(rho) * log2_two_over(rho) * static_cast<double>(t);
        auto threshold = random_graph_threshold(t);
        r.flags = {{"rho_ge_threshold", to_double(rho) >= threshold}, {"rho_le_1_100", rho <= Rational(1, 100)}};
        r.extras.emplace_back("rho_threshold", threshold);
        if (threshold > 0.01)
            r.note = "density threshold exceeds 1/100 at this t: no density satisfies both conditions";
        return r;
    }

    auto base_case(std::int64_t s, std::int64_t t) -> BoundReport
    {
        if (s < 0 || t < 1)
            throw std::invalid_argument("base case needs s >= 0 and t >= 1");
        BoundReport r{TheoremId::BaseCaseBinomial, {}, 0.0, {}, {}, {}};
        r.params.s = s;
        r.params.t = t;
        // log2 C(s+t, s) = sum_{i=1}^{s} log2((t+i)/i)
        double acc = 0.0;
        for (std::int64_t i = 1; i <= s; ++i)
            acc += std::log2(static_cast<double>(t + i)) - std::log2(static_cast<double>(i));
        r.log2_bound = acc;
        if (s >= 1)
        {
            Rational rho(s, t);
            r.params.rho = rho;
            auto chain = 2.0 * to_double(rho) * static_cast<double>(t) * log2_two_over(rho);
            r.extras.emplace_back("chain_log2", chain);
        }
        return r;
    }

    auto induction_step(std::int64_t s, std::int64_t t, Rational rho) -> BoundReport
    {
        check_args(t, rho);
        if (s < 1)
            throw std::invalid_argument("s must be at least 1");
        auto r = report(TheoremId::InductionStep, t, rho);
        r.params.s = s;
        auto rt = to_double(rho) * static_cast<double>(t);
        r.log2_bound = 12.0 * rt * log2_two_over(rho) * std::log2(2.0 * static_cast<double>(s) / rt);
        r.flags = {{"s_ge_rho_t", Rational(s) >= rho * t}, {"rho_le_1_16", rho <= Rational(1, 16)}};
        return r;
    }

    auto lower_bounds(std::int64_t t, Rational rho) -> std::pair<BoundReport, BoundReport>
    {
        check_args(t, rho);
        auto plant = report(TheoremId::LowerCliquePlant, t, rho);
        plant.log2_bound = std::sqrt(to_double(rho)) * static_cast<double>(t) / 4.0;
        plant.flags = {rho_at_most_one(rho)};
        // complete-graph registry entry: sqrt(2)^t <= r(K_t) <= 4^t
        plant.extras.emplace_back("complete_graph_lower_log2", static_cast<double>(t) / 2.0);
        plant.extras.emplace_back("complete_graph_upper_log2", 2.0 * static_cast<double>(t));

        auto random = report(TheoremId::LowerRandomEdges, t, rho);
        random.log2_bound = lower_random_constant * to_double(rho) * static_cast<double>(t);
        random.flags = {rho_at_most_one(rho)};
        random.extras.emplace_back("constant", lower_random_constant);
        random.note = "constant c = 1/4 is a pinned choice; only existence of some c is established";
        return {plant, random};
    }
}
