#include "rdense/json_io.hpp"
#include "rdense/graph_io.hpp"

#include <cstdio>

namespace rdense::json
{
    auto rational_string(const Rational & r) -> std::string
    {
        auto s = std::to_string(r.numerator());
        if (r.denominator() != 1)
            s += "/" + std::to_string(r.denominator());
        return s;
    }

    auto hex64(std::uint64_t v) -> std::string
    {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
        return buf;
    }

    auto to_json(const GraphStats & s) -> Json
    {
        return {{"t", s.t},
                {"m", s.m},
                {"rho", rational_string(s.density)},
                {"rho_value", s.density_value},
                {"max_degree", s.max_degree},
                {"isolated_free", s.isolated_free}};
    }

    auto to_json(const bounds::BoundReport & r) -> Json
    {
        Json params = Json::object();
        if (r.params.t)
            params["t"] = *r.params.t;
        if (r.params.rho)
        {
            params["rho"] = rational_string(*r.params.rho);
            params["rho_value"] = to_double(*r.params.rho);
        }
        if (r.params.m)
            params["m"] = *r.params.m;
        if (r.params.s)
            params["s"] = *r.params.s;
        Json flags = Json::object();
        for (auto & f : r.flags)
            flags[f.name] = f.passed;
        Json out{{"theorem", bounds::theorem_name(r.theorem)},
                 {"params", params},
                 {"log2_bound", r.log2_bound},
                 {"flags", flags},
                 {"preconditions_met", r.preconditions_met()}};
        if (! r.extras.empty())
        {
            Json extras = Json::object();
            for (auto & [k, v] : r.extras)
                extras[k] = v;
            out["extras"] = extras;
        }
        if (! r.note.empty())
            out["note"] = r.note;
        return out;
    }

    auto to_json(const BiDensityWitness & w) -> Json
    {
        return {{"x", w.x},
                {"y", w.y},
                {"density", rational_string(w.density)},
                {"density_value", to_double(w.density)},
                {"sigma", w.sigma},
                {"delta", w.delta}};
    }

    auto to_json(const BiDensityResult & r) -> Json
    {
        static const char * names[] = {"certified", "witness", "too_large"};
        Json out{{"status", names[static_cast<int>(r.status)]}, {"pairs_checked", r.pairs_checked}, {"part_size", r.part_size}};
        if (r.witness)
            out["witness"] = to_json(*r.witness);
        return out;
    }

    auto to_json(const embedder::EmbedResult & r, bool full) -> Json
    {
        Json out{{"status", r.success() ? "embedded" : "failure"}};
        if (r.embedding)
            out["embedding"] = r.embedding->image;
        if (r.failure)
            out["failure"] = {{"step", r.failure->step}, {"stuck", r.failure->stuck}, {"available", r.failure->available}};
        std::size_t rejected = 0;
        for (auto & s : r.trace.steps)
            rejected += s.rejected;
        out["trace_summary"] = {{"order", r.trace.order},
                                {"part_size", r.trace.part_size},
                                {"steps", r.trace.steps.size()},
                                {"rejected_candidates", rejected},
                                {"invariant_held", r.trace.invariant_held},
                                {"host_size",
                                 {{"part_size", r.trace.sizes.part_size},
                                  {"part_size_sufficient", r.trace.sizes.part_size_sufficient},
                                  {"order_sufficient", r.trace.sizes.order_sufficient}}}};
        if (full)
        {
            Json steps = Json::array();
            for (auto & s : r.trace.steps)
            {
                Json cands = Json::array();
                for (auto & c : s.candidates)
                    cands.push_back({{"vertex", c.vertex}, {"size", c.size}, {"placed_neighbours", c.placed_neighbours}, {"required", c.required}});
                Json step{{"pattern_vertex", s.pattern_vertex}, {"rejected", s.rejected}, {"candidates", cands}, {"invariant_held", s.invariant_held}};
                step["host_vertex"] = s.host_vertex ? Json(*s.host_vertex) : Json(nullptr);
                steps.push_back(step);
            }
            out["trace"] = steps;
        }
        return out;
    }

    auto to_json(const search::ChaseState & c) -> Json
    {
        Json sizes = Json::array();
        for (auto & s : c.sets)
            sizes.push_back(s.count());
        return {{"start_size", c.start.count()},
                {"pivots", c.pivots},
                {"string", c.letter_string()},
                {"set_sizes", sizes},
                {"final_set", c.final_set().to_vector()},
                {"red_threshold", c.red_threshold}};
    }

    auto to_json(const search::SearchOutcome & o, const std::string & verification, bool full) -> Json
    {
        Json out{{"outcome", search::outcome_name(o.kind)}, {"verified", o.found() && verification.empty()}};
        if (o.found())
            out["color"] = color_name(o.color);
        if (o.embedding)
            out["embedding"] = o.embedding->image;
        if (o.kind == search::OutcomeKind::FoundBlueClique)
            out["clique"] = o.clique;
        if (! verification.empty())
            out["verification_error"] = verification;
        Json strings = Json::array();
        for (auto & c : o.trace.chases)
            strings.push_back(c.letter_string());
        Json trace{{"nodes", o.trace.nodes},
                   {"deepest", o.trace.deepest},
                   {"events", o.trace.events.size()},
                   {"chase_strings", strings}};
        if (! o.found())
            trace["reason"] = o.trace.reason;
        if (full)
        {
            Json events = Json::array();
            for (auto & e : o.trace.events)
                events.push_back({{"depth", e.depth}, {"kind", e.kind}, {"set_size", e.set_size}, {"target", e.target}, {"detail", e.detail}});
            trace["event_log"] = events;
            Json chases = Json::array();
            for (auto & c : o.trace.chases)
                chases.push_back(to_json(c));
            trace["chases"] = chases;
        }
        out["trace"] = trace;
        return out;
    }

    auto to_json(const oracle::RamseyCertificate & c) -> Json
    {
        Json out{{"refused", c.refused}, {"nodes", c.nodes}, {"witness_at", c.lower_n}};
        if (c.refused)
            out["refusal"] = c.refusal;
        out["n"] = c.value ? Json(*c.value) : Json(nullptr);
        out["kind"] = c.value ? "upper" : "lower";
        if (c.witness)
            out["witness"] = serialize_coloring(*c.witness, ColoringFormat::Hex);
        return out;
    }

    auto to_json(const random_lab::PartitionCertificate & c) -> Json
    {
        return {{"part1", c.part1},
                {"part2", c.part2},
                {"size_dev", c.size_dev},
                {"max_cross_deg", c.max_cross_deg},
                {"size_bound", c.size_bound},
                {"degree_bound", c.degree_bound},
                {"tries_used", c.tries_used},
                {"accepted", c.accepted},
                {"flags", {{"t_ge_16", c.t_ge_16}, {"delta_condition", c.delta_condition}}}};
    }

    auto to_json(const random_lab::SpreadReport & r) -> Json
    {
        Json out{{"delta", r.delta},
                 {"eps", r.eps},
                 {"rho", r.rho},
                 {"set_size", r.set_size},
                 {"degree_threshold", r.degree_threshold},
                 {"worst_count", r.worst_count},
                 {"threshold", r.threshold},
                 {"sets_inspected", r.sets_inspected},
                 {"mode", r.mode == random_lab::SpreadMode::Exhaustive ? "exhaustive" : "sampled"},
                 {"vacuous", r.vacuous},
                 {"exceeds", r.exceeds},
                 {"refused", r.refused}};
        return out;
    }

    auto to_json(const random_lab::TailEstimate & t) -> Json
    {
        return {{"threshold", t.threshold},
                {"hits", t.hits},
                {"samples", t.samples},
                {"frequency", t.frequency},
                {"bound", t.bound},
                {"dominated", t.dominated}};
    }

    auto to_json(const random_lab::DegreeTailReport & r) -> Json
    {
        return {{"max_degree", r.max_degree}, {"bound", r.bound}, {"margin", r.margin}, {"pass", r.pass}};
    }
}
