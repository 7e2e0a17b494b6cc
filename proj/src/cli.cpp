#include "rdense/cli.hpp"
#include "rdense/bounds.hpp"
#include "rdense/embedder.hpp"
#include "rdense/graph_io.hpp"
#include "rdense/json_io.hpp"
#include "rdense/oracle.hpp"
#include "rdense/random_lab.hpp"
#include "rdense/rng.hpp"
#include "rdense/search.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <thread>

namespace rdense::cli
{
    namespace
    {
        using json::Json;

        struct UsageError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        struct InputError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        auto fmt(double v) -> std::string
        {
            char buf[64];
            auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
            return std::string(buf, end);
        }

        auto split(const std::string & s, char sep) -> std::vector<std::string>
        {
            std::vector<std::string> parts;
            std::string cur;
            std::istringstream in(s);
            while (std::getline(in, cur, sep))
                if (! cur.empty())
                    parts.push_back(cur);
            return parts;
        }

        auto read_file(const std::string & path) -> std::string
        {
            std::ifstream in(path, std::ios::binary);
            if (! in)
                throw InputError("cannot read file '" + path + "'");
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }

        auto parse_number(const std::string & flag, const std::string & text) -> Rational
        {
            try
            {
                return parse_rational(text);
            }
            catch (const std::exception & e)
            {
                throw UsageError(flag + ": cannot parse '" + text + "' as a number");
            }
        }

        auto parse_u64(const std::string & flag, const std::string & text) -> std::uint64_t
        {
            std::uint64_t v = 0;
            auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (ec != std::errc{} || p != text.data() + text.size())
                throw UsageError(flag + ": cannot parse '" + text + "' as a non-negative integer");
            return v;
        }

        auto parse_color(const std::string & text) -> Color
        {
            if (text == "R" || text == "r" || text == "red")
                return Color::Red;
            if (text == "B" || text == "b" || text == "blue")
                return Color::Blue;
            throw UsageError("--color: expected R or B, got '" + text + "'");
        }

        struct Source
        {
            std::string text;
            bool file = false;
        };

        auto graph_from_spec(const std::string & spec, Source * src) -> Graph
        {
            static const std::regex shorthand(R"(([kpce])(\d+))");
            static const std::regex gnp(R"(gnp:(\d+):([^:]+):(\d+))");
            std::smatch m;
            if (std::regex_match(spec, m, shorthand))
            {
                auto t = static_cast<std::size_t>(parse_u64(spec, m[2]));
                if (t == 0 || t > 100000)
                    throw InputError(spec + ": order out of range");
                if (src)
                    *src = {spec, false};
                switch (spec[0])
                {
                case 'k': return Graph::complete(t);
                case 'p': return Graph::path(t);
                case 'c':
                    if (t < 3)
                        throw InputError(spec + ": a cycle needs at least 3 vertices");
                    return Graph::cycle(t);
                default: return Graph::empty(t);
                }
            }
            if (std::regex_match(spec, m, gnp))
            {
                auto t = parse_u64(spec, m[1]);
                auto rho = to_double(parse_number(spec, m[2]));
                if (t == 0 || t > 100000 || rho < 0.0 || rho > 1.0)
                    throw InputError(spec + ": parameters out of range");
                if (src)
                    *src = {spec, false};
                return random_lab::sample_gnp(t, rho, parse_u64(spec, m[3]));
            }
            auto text = read_file(spec);
            if (src)
                *src = {text, true};
            try
            {
                return parse_graph(text);
            }
            catch (const ParseError & e)
            {
                throw InputError(spec + ": " + e.what());
            }
        }

        auto coloring_from_spec(const std::string & spec, Source * src) -> Coloring
        {
            static const std::regex rand(R"(rand:(\d+):([^:]+):(\d+))");
            std::smatch m;
            if (spec.rfind("red:", 0) == 0 || spec.rfind("blue:", 0) == 0)
            {
                bool red = spec[0] == 'r';
                Source inner;
                auto g = graph_from_spec(spec.substr(red ? 4 : 5), &inner);
                if (src)
                    *src = {inner.file ? spec + "\n" + inner.text : spec, inner.file};
                return red ? Coloring(std::move(g)) : Coloring(g.complement());
            }
            if (std::regex_match(spec, m, rand))
            {
                auto n = parse_u64(spec, m[1]);
                auto p = to_double(parse_number(spec, m[2]));
                if (n > 100000 || p < 0.0 || p > 1.0)
                    throw InputError(spec + ": parameters out of range");
                if (src)
                    *src = {spec, false};
                return random_lab::sample_coloring(n, p, parse_u64(spec, m[3]));
            }
            auto text = read_file(spec);
            if (src)
                *src = {text, true};
            try
            {
                return parse_coloring(text);
            }
            catch (const ParseError & e)
            {
                throw InputError(spec + ": " + e.what());
            }
        }

        /// Everything that goes into the manifest besides the command line.
        class Context
        {
        public:
            explicit Context(std::vector<std::string> argv) : argv_(std::move(argv)) {}

            auto graph(const std::string & label, const std::string & spec) -> Graph
            {
                Source src;
                auto g = graph_from_spec(spec, &src);
                record(label, spec, src);
                return g;
            }

            auto coloring(const std::string & label, const std::string & spec) -> Coloring
            {
                Source src;
                auto c = coloring_from_spec(spec, &src);
                record(label, spec, src);
                return c;
            }

            void seed(const std::string & name, std::uint64_t value) { seeds_[name] = value; }

            auto manifest() const -> Json
            {
                return {{"argv", argv_},
                        {"tool", "rdense"},
                        {"tool_version", tool_version},
                        {"generator", {{"name", std::string(Rng::name)}, {"version", Rng::version}}},
                        {"inputs", inputs_},
                        {"seeds", seeds_},
                        {"schema_version", 1}};
            }

        private:
            void record(const std::string & label, const std::string & spec, const Source & src)
            {
                inputs_[label] = {{"spec", spec}, {"kind", src.file ? "file" : "shorthand"}, {"fnv1a64", json::hex64(fnv1a64(src.text))}};
            }

            std::vector<std::string> argv_;
            Json inputs_ = Json::object();
            Json seeds_ = Json::object();
        };

        struct Output
        {
            Json body;
            std::optional<std::string> csv;
        };

        auto pattern_stats(const Graph & g) -> Json
        {
            if (g.order() < 2)
                return {{"t", g.order()}, {"m", 0}};
            return json::to_json(graph_stats(g));
        }

        // ---------------------------------------------------------------- bounds

        struct BoundsArgs
        {
            std::string theorem, t, rho, s, m;
            bool grid = false;
        };

        auto evaluate_bound(bounds::TheoremId id, std::optional<std::int64_t> t, std::optional<Rational> rho,
                            std::optional<std::int64_t> s, std::optional<std::int64_t> m) -> bounds::BoundReport
        {
            using bounds::TheoremId;
            auto need = [&](bool ok, const char * what) {
                if (! ok)
                    throw UsageError("--theorem " + bounds::theorem_name(id) + " requires " + what);
            };
            switch (id)
            {
            case TheoremId::EdgesForm:
                need(m && t, "--m and --t");
                return bounds::edges_form(*m, *t);
            case TheoremId::BaseCaseBinomial:
                need(s && t, "--s and --t");
                return bounds::base_case(*s, *t);
            case TheoremId::InductionStep:
                need(s && t && rho, "--s, --t and --rho");
                return bounds::induction_step(*s, *t, *rho);
            default:
                break;
            }
            need(t && rho, "--t and --rho");
            switch (id)
            {
            case TheoremId::MainDense: return bounds::main_dense(*t, *rho);
            case TheoremId::CliqueMaxDeg: return bounds::clique_maxdeg(*t, *rho);
            case TheoremId::CliqueDense: return bounds::clique_dense(*t, *rho);
            case TheoremId::RandomGraph: return bounds::random_graph(*t, *rho);
            case TheoremId::LowerCliquePlant: return bounds::lower_bounds(*t, *rho).first;
            default: return bounds::lower_bounds(*t, *rho).second;
            }
        }

        auto run_bounds(const BoundsArgs & a) -> Output
        {
            auto theorems = split(a.theorem, ',');
            if (theorems.empty())
                throw UsageError("--theorem is required");
            std::vector<bounds::TheoremId> ids;
            for (auto & name : theorems)
            {
                auto id = bounds::parse_theorem(name);
                if (! id)
                    throw UsageError("--theorem: unknown theorem '" + name + "'");
                ids.push_back(*id);
            }
            auto ints = [](const std::string & flag, const std::string & text) {
                std::vector<std::optional<std::int64_t>> v;
                for (auto & p : split(text, ','))
                    v.push_back(static_cast<std::int64_t>(parse_u64(flag, p)));
                if (v.empty())
                    v.push_back(std::nullopt);
                return v;
            };
            std::vector<std::optional<Rational>> rhos;
            for (auto & p : split(a.rho, ','))
                rhos.push_back(parse_number("--rho", p));
            if (rhos.empty())
                rhos.push_back(std::nullopt);
            auto ts = ints("--t", a.t), ss = ints("--s", a.s), ms = ints("--m", a.m);

            bool grid = a.grid || ids.size() > 1 || ts.size() > 1 || rhos.size() > 1 || ss.size() > 1 || ms.size() > 1;
            std::vector<bounds::BoundReport> reports;
            for (auto id : ids)
                for (auto & t : ts)
                    for (auto & rho : rhos)
                        for (auto & s : ss)
                            for (auto & m : ms)
                            {
                                try
                                {
                                    reports.push_back(evaluate_bound(id, t, rho, s, m));
                                }
                                catch (const std::invalid_argument & e)
                                {
                                    throw InputError(e.what());
                                }
                            }

            std::string csv = "theorem,t,rho,s,m,log2_bound,preconditions_met,failed_flags\n";
            Json rows = Json::array();
            for (auto & r : reports)
            {
                std::string failed;
                for (auto & f : r.flags)
                    if (! f.passed)
                        failed += (failed.empty() ? "" : ";") + f.name;
                auto opt = [](auto & o) { return o ? std::to_string(*o) : std::string{}; };
                csv += bounds::theorem_name(r.theorem) + "," + opt(r.params.t) + "," +
                       (r.params.rho ? json::rational_string(*r.params.rho) : "") + "," + opt(r.params.s) + "," +
                       opt(r.params.m) + "," + fmt(r.log2_bound) + "," + (r.preconditions_met() ? "true" : "false") +
                       "," + failed + "\n";
                rows.push_back(json::to_json(r));
            }
            if (grid)
                return {{{"rows", rows}}, csv};
            return {rows[0], csv};
        }

        // ----------------------------------------------------------------- embed

        struct EmbedArgs
        {
            std::string pattern, host, color;
            double delta = 0.0;
            std::optional<double> sigma;
            std::uint64_t seed = 0;
            std::uint64_t budget = 1'000'000'000;
            std::uint64_t tries = 16;
            bool trace_full = false;
        };

        auto run_embed(Context & ctx, const EmbedArgs & a) -> Output
        {
            auto pattern = ctx.graph("pattern", a.pattern);
            Graph host;
            if (a.color.empty())
                host = ctx.graph("host", a.host);
            else
                host = ctx.coloring("host", a.host).graph(parse_color(a.color));
            ctx.seed("seed", a.seed);
            if (! (a.delta > 0.0 && a.delta <= 1.0))
                throw UsageError("--delta must lie in (0, 1]");

            Json body;
            try
            {
                auto result = embedder::embed_greedy(pattern, host, a.delta);
                body = json::to_json(result, a.trace_full);
            }
            catch (const std::invalid_argument & e)
            {
                throw InputError(e.what());
            }
            body["pattern"] = pattern_stats(pattern);
            body["host_order"] = host.order();
            auto delta_max = pattern.max_degree();
            if (delta_max >= 1)
                body["lemma_sigma"] = embedder::lemma_sigma(a.delta, delta_max);
            if (a.sigma)
            {
                if (! (*a.sigma > 0.0 && *a.sigma <= 0.5))
                    throw UsageError("--sigma must lie in (0, 1/2]");
                auto exact = embedder::check_bidense_exact(host, *a.sigma, a.delta, a.budget);
                Json bd = json::to_json(exact);
                bd["method"] = "exact";
                if (exact.status == BiDensityStatus::TooLarge)
                {
                    auto w = embedder::find_sparse_pair_heuristic(host, *a.sigma, a.delta, a.tries, a.seed);
                    bd["heuristic"] = w ? json::to_json(*w) : Json(nullptr);
                    bd["method"] = "heuristic";
                }
                body["bidensity"] = bd;
            }
            return {body, std::nullopt};
        }

        // ---------------------------------------------------------------- search

        struct SearchArgs
        {
            std::string coloring, pattern, mode = "mono", rho, exceptional;
            std::optional<std::size_t> clique_s, delta_cap;
            std::uint64_t budget = 2000;
            std::uint64_t seed = 0;
            std::optional<double> sigma;
            bool trace_full = false;
        };

        auto default_rho(const Graph & h) -> double
        {
            if (h.order() >= 2 && h.edge_count() > 0)
                return graph_stats(h).density_value;
            return 0.05;
        }

        /// Up to ⌊√t⌋ highest-degree vertices as the exceptional set, the
        /// largest remaining degree as the cap.
        auto default_witness(const Graph & h) -> BoundedGraphWitness
        {
            std::vector<Vertex> order(h.order());
            for (Vertex v = 0; v < h.order(); ++v)
                order[v] = v;
            std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
            auto q = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(h.order()))));
            BoundedGraphWitness w;
            w.exceptional.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(std::min(q, order.size())));
            std::sort(w.exceptional.begin(), w.exceptional.end());
            for (auto i = w.exceptional.size(); i < order.size(); ++i)
                w.max_degree = std::max(w.max_degree, h.degree(order[i]));
            return w;
        }

        struct SearchRun
        {
            search::SearchOutcome outcome;
            std::string verification;
            std::size_t s = 0;
        };

        auto run_one_search(const Coloring & coloring, const Graph & h, const std::string & mode, search::SearchConfig config,
                            std::optional<std::size_t> clique_s, const std::optional<BoundedGraphWitness> & witness) -> SearchRun
        {
            SearchRun r;
            if (mode == "mono")
                r.outcome = search::find_mono_H(coloring, h, config);
            else if (mode == "vs-clique")
            {
                r.s = clique_s.value_or(h.order());
                if (r.s == 0)
                    throw UsageError("--clique-s must be at least 1");
                r.outcome = search::find_red_H_or_blue_clique(coloring, h, r.s, config);
            }
            else if (mode == "random-bounded")
            {
                config.l_rule = search::LRule::RandomGraph;
                auto w = witness ? *witness : default_witness(h);
                try
                {
                    r.outcome = search::find_random_graph_mono(coloring, h, w, config);
                }
                catch (const std::invalid_argument & e)
                {
                    throw InputError(std::string("witness: ") + e.what());
                }
            }
            else
                throw UsageError("--mode: expected mono, vs-clique or random-bounded");
            r.verification = search::verify_outcome(coloring, h, r.s, r.outcome);
            return r;
        }

        auto make_config(const Graph & h, const std::string & rho, std::uint64_t budget, std::uint64_t seed,
                         std::optional<double> sigma) -> search::SearchConfig
        {
            search::SearchConfig config;
            config.rho = rho.empty() ? default_rho(h) : to_double(parse_number("--rho", rho));
            if (! (config.rho > 0.0 && config.rho <= 1.0))
                throw UsageError("--rho must lie in (0, 1]");
            config.node_budget = budget;
            config.seed = seed;
            if (sigma)
                config.sigma = *sigma;
            return config;
        }

        auto run_search(Context & ctx, const SearchArgs & a) -> Output
        {
            auto coloring = ctx.coloring("coloring", a.coloring);
            auto h = ctx.graph("pattern", a.pattern);
            ctx.seed("seed", a.seed);
            auto config = make_config(h, a.rho, a.budget, a.seed, a.sigma);
            std::optional<BoundedGraphWitness> witness;
            if (a.delta_cap || ! a.exceptional.empty())
            {
                witness.emplace();
                witness->max_degree = a.delta_cap.value_or(h.max_degree());
                for (auto & v : split(a.exceptional, ','))
                    witness->exceptional.push_back(static_cast<Vertex>(parse_u64("--exceptional", v)));
            }
            auto r = run_one_search(coloring, h, a.mode, config, a.clique_s, witness);
            auto body = json::to_json(r.outcome, r.verification, a.trace_full);
            body["mode"] = a.mode;
            body["n"] = coloring.order();
            body["pattern"] = pattern_stats(h);
            body["rho"] = config.rho;
            if (a.mode == "vs-clique")
                body["clique_s"] = r.s;
            return {body, std::nullopt};
        }

        // ---------------------------------------------------------------- random

        struct RandomArgs
        {
            std::size_t t = 0;
            std::string rho, graph, graph_out, mode = "sampled";
            std::uint64_t seed = 0, max_tries = 64, budget = 10000, n = 0, empirical = 0;
            std::string p, theta, delta, eps;
        };

        auto unit_interval(const std::string & flag, const std::string & text, bool open) -> double
        {
            if (text.empty())
                throw UsageError(flag + " is required");
            auto v = to_double(parse_number(flag, text));
            if (v < 0.0 || v > 1.0 || (open && (v == 0.0 || v == 1.0)))
                throw UsageError(flag + " out of range");
            return v;
        }

        auto run_random(Context & ctx, const std::string & which, const RandomArgs & a) -> Output
        {
            if (which == "gnp")
            {
                if (a.t == 0)
                    throw UsageError("--t is required");
                auto rho = unit_interval("--rho", a.rho, false);
                ctx.seed("seed", a.seed);
                auto g = random_lab::sample_gnp(a.t, rho, a.seed);
                auto text = serialize_graph(g);
                if (! a.graph_out.empty())
                {
                    std::ofstream f(a.graph_out, std::ios::binary);
                    if (! (f << text))
                        throw InputError("cannot write '" + a.graph_out + "'");
                }
                Json body{{"graph_fnv1a64", json::hex64(fnv1a64(text))}, {"degree_tail", json::to_json(random_lab::max_degree_tail_check(g, rho))}};
                body["stats"] = pattern_stats(g);
                if (a.graph_out.empty())
                    body["graph"] = text;
                return {body, std::nullopt};
            }
            if (which == "partition")
            {
                auto g = ctx.graph("graph", a.graph);
                ctx.seed("seed", a.seed);
                return {json::to_json(random_lab::judicious_partition(g, a.max_tries, a.seed)), std::nullopt};
            }
            if (which == "spread")
            {
                auto g = ctx.graph("graph", a.graph);
                ctx.seed("seed", a.seed);
                auto delta = unit_interval("--delta", a.delta, false);
                auto rho = unit_interval("--rho", a.rho, false);
                if (a.eps.empty())
                    throw UsageError("--eps is required");
                auto eps = to_double(parse_number("--eps", a.eps));
                if (delta <= 0.0 || rho <= 0.0 || eps <= 0.0)
                    throw UsageError("--delta, --rho and --eps must be positive");
                random_lab::SpreadMode mode;
                if (a.mode == "exhaustive")
                    mode = random_lab::SpreadMode::Exhaustive;
                else if (a.mode == "sampled")
                    mode = random_lab::SpreadMode::Sampled;
                else
                    throw UsageError("--mode: expected exhaustive or sampled");
                return {json::to_json(random_lab::verify_degree_spread(g, delta, eps, rho, mode, a.budget, a.seed)), std::nullopt};
            }
            if (which == "degree-tail")
            {
                auto g = ctx.graph("graph", a.graph);
                auto rho = unit_interval("--rho", a.rho, false);
                return {json::to_json(random_lab::max_degree_tail_check(g, rho)), std::nullopt};
            }
            // chernoff
            if (a.n == 0)
                throw UsageError("--n is required and must be positive");
            auto p = unit_interval("--p", a.p, true);
            auto theta = unit_interval("--theta", a.theta, false);
            Json body{{"n", a.n}, {"p", p}, {"theta", theta}, {"bound", random_lab::chernoff_tail(a.n, p, theta)}, {"base", "e"}};
            if (a.empirical > 0)
            {
                ctx.seed("seed", a.seed);
                auto draws = random_lab::binomial_samples(a.n, p, a.empirical, a.seed);
                body["empirical"] = json::to_json(random_lab::empirical_tail(draws, a.n, p, theta));
            }
            return {body, std::nullopt};
        }

        // ---------------------------------------------------------------- oracle

        struct OracleArgs
        {
            std::string coloring, pattern, color = "R", h1, h2;
            std::size_t nmax = 8, guard = 8, n = 0;
            std::uint64_t tries = 1000, seed = 0;
            std::string p_red = "1/2";
        };

        auto run_oracle(Context & ctx, const std::string & which, const OracleArgs & a) -> Output
        {
            if (which == "find")
            {
                auto coloring = ctx.coloring("coloring", a.coloring);
                auto h = ctx.graph("pattern", a.pattern);
                auto color = parse_color(a.color);
                auto e = oracle::find_mono_subgraph_exact(coloring, h, color);
                Json body{{"found", e.has_value()}, {"color", color_name(color)}, {"n", coloring.order()}, {"pattern", pattern_stats(h)}};
                if (e)
                {
                    body["embedding"] = e->image;
                    body["verified"] = oracle::verify_embedding(h, coloring, color, e->image).ok;
                }
                return {body, std::nullopt};
            }
            if (which == "ramsey")
            {
                auto h1 = ctx.graph("h1", a.h1);
                auto h2 = ctx.graph("h2", a.h2);
                auto cert = oracle::ramsey_number_exact(h1, h2, a.nmax, {a.guard});
                auto body = json::to_json(cert);
                body["h1"] = pattern_stats(h1);
                body["h2"] = pattern_stats(h2);
                body["nmax"] = a.nmax;
                if (cert.witness)
                    body["witness_verified"] = oracle::avoids(*cert.witness, h1, h2);
                return {body, std::nullopt};
            }
            // certify-lower
            auto h = ctx.graph("pattern", a.pattern);
            ctx.seed("seed", a.seed);
            auto p = unit_interval("--p-red", a.p_red, false);
            auto cert = oracle::lower_bound_certificate_random(h, a.n, a.tries, a.seed, p);
            Json body{{"kind", "lower"},
                      {"n", a.n},
                      {"found", cert.coloring.has_value()},
                      {"tries_used", cert.tries_used},
                      {"generator_version", std::string(Rng::name) + "/" + std::to_string(Rng::version)},
                      {"pattern", pattern_stats(h)}};
            if (cert.coloring)
            {
                body["verified"] = ! oracle::find_mono_subgraph_exact(*cert.coloring, h, Color::Red) &&
                                   ! oracle::find_mono_subgraph_exact(*cert.coloring, h, Color::Blue);
                body["coloring"] = serialize_coloring(*cert.coloring, ColoringFormat::Hex);
            }
            return {body, std::nullopt};
        }

        // ----------------------------------------------------------------- sweep

        struct SweepArgs
        {
            std::string mode = "mono", patterns, ns, p_red = "1/2", rho;
            std::uint64_t seeds = 10, seed_base = 0, budget = 2000;
            std::optional<std::size_t> clique_s;
        };

        auto worker_count() -> std::size_t
        {
            if (auto env = std::getenv("RDENSE_WORKERS"))
            {
                std::size_t v = 0;
                std::from_chars(env, env + std::char_traits<char>::length(env), v);
                if (v > 0)
                    return v;
            }
            return std::max(1u, std::thread::hardware_concurrency());
        }

        /// Runs f(i) for i in [0, count) on a small pool; results are stored by index.
        void parallel_for(std::size_t count, const std::function<void(std::size_t)> & f)
        {
            std::atomic<std::size_t> next{0};
            std::exception_ptr failure;
            std::mutex failure_lock;
            auto work = [&] {
                for (std::size_t i; (i = next++) < count;)
                {
                    try
                    {
                        f(i);
                    }
                    catch (...)
                    {
                        std::lock_guard lock(failure_lock);
                        if (! failure)
                            failure = std::current_exception();
                    }
                }
            };
            std::vector<std::thread> pool;
            auto workers = std::min(worker_count(), count);
            for (std::size_t w = 1; w < workers; ++w)
                pool.emplace_back(work);
            work();
            for (auto & t : pool)
                t.join();
            if (failure)
                std::rethrow_exception(failure);
        }

        auto run_sweep(Context & ctx, const SweepArgs & a) -> Output
        {
            auto pattern_specs = split(a.patterns, ',');
            if (pattern_specs.empty())
                throw UsageError("--patterns is required");
            std::vector<Graph> patterns;
            for (std::size_t i = 0; i < pattern_specs.size(); ++i)
                patterns.push_back(ctx.graph("pattern" + std::to_string(i), pattern_specs[i]));
            std::vector<std::uint64_t> ns;
            for (auto & n : split(a.ns, ','))
                ns.push_back(parse_u64("--n", n));
            if (ns.empty())
                throw UsageError("--n is required");
            std::vector<std::string> ps = split(a.p_red, ',');
            for (auto & p : ps)
                unit_interval("--p-red", p, false);
            ctx.seed("seed_base", a.seed_base);

            struct Cell
            {
                std::size_t pattern;
                std::uint64_t n;
                std::string p;
                std::uint64_t seed;
                SearchRun result;
            };
            std::vector<Cell> cells;
            for (std::size_t pi = 0; pi < patterns.size(); ++pi)
                for (auto n : ns)
                    for (auto & p : ps)
                        for (std::uint64_t k = 0; k < a.seeds; ++k)
                            cells.push_back({pi, n, p, a.seed_base + k, {}});

            parallel_for(cells.size(), [&](std::size_t i) {
                auto & c = cells[i];
                auto coloring = random_lab::sample_coloring(c.n, to_double(parse_rational(c.p)), c.seed);
                auto config = make_config(patterns[c.pattern], a.rho, a.budget, c.seed, std::nullopt);
                c.result = run_one_search(coloring, patterns[c.pattern], a.mode, config, a.clique_s, std::nullopt);
            });

            std::string csv = "mode,pattern,n,p_red,seed,outcome,color,verified,nodes,deepest,reason\n";
            Json rows = Json::array();
            std::map<std::string, std::size_t> counts;
            for (auto & c : cells)
            {
                auto & o = c.result.outcome;
                bool verified = o.found() && c.result.verification.empty();
                std::string reason = o.found() ? "" : o.trace.reason;
                std::replace(reason.begin(), reason.end(), ',', ';');
                csv += a.mode + "," + pattern_specs[c.pattern] + "," + std::to_string(c.n) + "," + c.p + "," +
                       std::to_string(c.seed) + "," + search::outcome_name(o.kind) + "," +
                       (o.found() ? color_name(o.color) : "") + "," + (verified ? "true" : "false") + "," +
                       std::to_string(o.trace.nodes) + "," + std::to_string(o.trace.deepest) + "," + reason + "\n";
                rows.push_back({{"pattern", pattern_specs[c.pattern]},
                                {"n", c.n},
                                {"p_red", c.p},
                                {"seed", c.seed},
                                {"outcome", search::outcome_name(o.kind)},
                                {"verified", verified},
                                {"nodes", o.trace.nodes}});
                ++counts[search::outcome_name(o.kind)];
            }
            return {{{"mode", a.mode}, {"cells", rows}, {"counts", counts}}, csv};
        }

        auto write_output(const std::string & path, const std::string & text, std::ostream & out)
        {
            if (path.empty())
            {
                out << text;
                return;
            }
            std::ofstream f(path, std::ios::binary);
            if (! (f << text))
                throw InputError("cannot write '" + path + "'");
        }

        auto strip_out(const std::vector<std::string> & args) -> std::vector<std::string>
        {
            std::vector<std::string> kept;
            for (std::size_t i = 0; i < args.size(); ++i)
            {
                if (args[i] == "--out")
                {
                    ++i;
                    continue;
                }
                if (args[i].rfind("--out=", 0) == 0)
                    continue;
                kept.push_back(args[i]);
            }
            return kept;
        }

        auto run_replay(const std::string & manifest_path, const std::string & check, std::ostream & out, std::ostream & err,
                        const std::string & out_path) -> int
        {
            Json doc;
            try
            {
                doc = Json::parse(read_file(manifest_path));
            }
            catch (const Json::exception & e)
            {
                throw InputError(manifest_path + ": " + e.what());
            }
            const Json & manifest = doc.contains("manifest") ? doc["manifest"] : doc;
            if (! manifest.contains("argv") || ! manifest["argv"].is_array())
                throw InputError(manifest_path + ": no argv in manifest");
            auto argv = manifest["argv"].get<std::vector<std::string>>();
            if (! argv.empty() && argv[0] == "replay")
                throw InputError(manifest_path + ": a manifest cannot replay another replay");
            if (manifest.value("tool_version", "") != tool_version)
                err << "warning: manifest was written by tool version " << manifest.value("tool_version", "?") << "\n";
            auto inputs = manifest.value("inputs", Json::object());
            for (auto & [label, input] : inputs.items())
            {
                if (input.value("kind", "") != "file")
                    continue;
                auto spec = input.value("spec", "");
                std::string text;
                if (spec.rfind("red:", 0) == 0 || spec.rfind("blue:", 0) == 0)
                    text = spec + "\n" + read_file(spec.substr(spec[0] == 'r' ? 4 : 5));
                else
                    text = read_file(spec);
                if (json::hex64(fnv1a64(text)) != input.value("fnv1a64", ""))
                    throw InputError("input '" + label + "' (" + spec + ") changed since the manifest was written");
            }
            std::ostringstream buffer;
            auto code = run(argv, buffer, err);
            if (code != 0)
                return code;
            if (! check.empty() && read_file(check) != buffer.str())
            {
                err << "replay output differs from " << check << "\n";
                return 2;
            }
            write_output(out_path, buffer.str(), out);
            return 0;
        }
    }

    auto load_graph(const std::string & spec) -> Graph { return graph_from_spec(spec, nullptr); }

    auto load_coloring(const std::string & spec) -> Coloring { return coloring_from_spec(spec, nullptr); }

    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Ramsey numbers of dense graphs: bounds, embeddings, searches and exact oracles", "rdense"};
        app.require_subcommand(1);
        app.fallthrough();
        std::string out_path, format = "json";
        app.add_option("--out", out_path, "write output to this file instead of stdout");
        app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

        BoundsArgs ba;
        auto * bounds_cmd = app.add_subcommand("bounds", "evaluate a bound formula (log2 domain)");
        bounds_cmd->add_option("--theorem", ba.theorem, "theorem id (comma list for grids)")->required();
        bounds_cmd->add_option("--t", ba.t, "order t (comma list)");
        bounds_cmd->add_option("--rho", ba.rho, "density as p/q or decimal (comma list)");
        bounds_cmd->add_option("--s", ba.s, "clique size s (comma list)");
        bounds_cmd->add_option("--m", ba.m, "edge count m (comma list)");
        bounds_cmd->add_flag("--grid", ba.grid, "always emit a row set");

        EmbedArgs ea;
        auto * embed_cmd = app.add_subcommand("embed", "greedy embedding of a pattern into a host");
        embed_cmd->add_option("--pattern", ea.pattern)->required();
        embed_cmd->add_option("--host", ea.host, "host graph, or a coloring when --color is given")->required();
        embed_cmd->add_option("--color", ea.color, "R or B: embed into that class of a coloring host");
        embed_cmd->add_option("--delta", ea.delta)->required();
        embed_cmd->add_option("--sigma", ea.sigma, "also check bi-(sigma, delta)-density of the host");
        embed_cmd->add_option("--seed", ea.seed);
        embed_cmd->add_option("--budget", ea.budget, "pair budget for the exact bi-density check");
        embed_cmd->add_option("--tries", ea.tries, "heuristic tries when the exact check is too large");
        embed_cmd->add_flag("--trace-full", ea.trace_full);

        SearchArgs sa;
        auto * search_cmd = app.add_subcommand("search", "constructive search on a coloring");
        search_cmd->add_option("--coloring", sa.coloring)->required();
        search_cmd->add_option("--pattern", sa.pattern)->required();
        search_cmd->add_option("--mode", sa.mode)->check(CLI::IsMember({"mono", "vs-clique", "random-bounded"}));
        search_cmd->add_option("--rho", sa.rho, "density parameter (default: density of the pattern)");
        search_cmd->add_option("--clique-s", sa.clique_s);
        search_cmd->add_option("--budget", sa.budget, "recursion node budget");
        search_cmd->add_option("--seed", sa.seed);
        search_cmd->add_option("--sigma", sa.sigma);
        search_cmd->add_option("--delta-cap", sa.delta_cap, "random-bounded: degree cap of the witness");
        search_cmd->add_option("--exceptional", sa.exceptional, "random-bounded: comma list of exceptional vertices");
        search_cmd->add_flag("--trace-full", sa.trace_full);

        RandomArgs ra;
        auto * random_cmd = app.add_subcommand("random", "random graphs and the probabilistic lemmas");
        random_cmd->require_subcommand(1);
        auto * gnp_cmd = random_cmd->add_subcommand("gnp", "sample G(t, rho)");
        gnp_cmd->add_option("--t", ra.t)->required();
        gnp_cmd->add_option("--rho", ra.rho)->required();
        gnp_cmd->add_option("--seed", ra.seed);
        gnp_cmd->add_option("--graph-out", ra.graph_out, "write the graph file here");
        auto * part_cmd = random_cmd->add_subcommand("partition", "balanced random bisection with certificate");
        part_cmd->add_option("--graph", ra.graph)->required();
        part_cmd->add_option("--max-tries", ra.max_tries);
        part_cmd->add_option("--seed", ra.seed);
        auto * spread_cmd = random_cmd->add_subcommand("spread", "degree-spread report");
        spread_cmd->add_option("--graph", ra.graph)->required();
        spread_cmd->add_option("--delta", ra.delta)->required();
        spread_cmd->add_option("--eps", ra.eps)->required();
        spread_cmd->add_option("--rho", ra.rho)->required();
        spread_cmd->add_option("--mode", ra.mode);
        spread_cmd->add_option("--budget", ra.budget);
        spread_cmd->add_option("--seed", ra.seed);
        auto * tail_cmd = random_cmd->add_subcommand("degree-tail", "max degree against rho t + 4 sqrt(rho t log t)");
        tail_cmd->add_option("--graph", ra.graph)->required();
        tail_cmd->add_option("--rho", ra.rho)->required();
        auto * chernoff_cmd = random_cmd->add_subcommand("chernoff", "Chernoff tail bound, optionally with Monte Carlo");
        chernoff_cmd->add_option("--n", ra.n)->required();
        chernoff_cmd->add_option("--p", ra.p)->required();
        chernoff_cmd->add_option("--theta", ra.theta)->required();
        chernoff_cmd->add_option("--empirical", ra.empirical, "number of Monte Carlo samples");
        chernoff_cmd->add_option("--seed", ra.seed);

        OracleArgs oa;
        auto * oracle_cmd = app.add_subcommand("oracle", "exact searches and certificates");
        oracle_cmd->require_subcommand(1);
        auto * find_cmd = oracle_cmd->add_subcommand("find", "exact monochromatic subgraph search");
        find_cmd->add_option("--coloring", oa.coloring)->required();
        find_cmd->add_option("--pattern", oa.pattern)->required();
        find_cmd->add_option("--color", oa.color);
        auto * ramsey_cmd = oracle_cmd->add_subcommand("ramsey", "exact r(H1, H2) by enumeration");
        ramsey_cmd->add_option("--h1", oa.h1)->required();
        ramsey_cmd->add_option("--h2", oa.h2)->required();
        ramsey_cmd->add_option("--nmax", oa.nmax);
        ramsey_cmd->add_option("--guard", oa.guard, "largest n the enumeration may attempt");
        auto * lower_cmd = oracle_cmd->add_subcommand("certify-lower", "random lower-bound certificate");
        lower_cmd->add_option("--pattern", oa.pattern)->required();
        lower_cmd->add_option("--n", oa.n)->required();
        lower_cmd->add_option("--tries", oa.tries);
        lower_cmd->add_option("--seed", oa.seed);
        lower_cmd->add_option("--p-red", oa.p_red);

        SweepArgs wa;
        auto * sweep_cmd = app.add_subcommand("sweep", "seeded search grid over random colorings");
        sweep_cmd->add_option("--mode", wa.mode)->check(CLI::IsMember({"mono", "vs-clique", "random-bounded"}));
        sweep_cmd->add_option("--patterns", wa.patterns, "comma list of patterns")->required();
        sweep_cmd->add_option("--n", wa.ns, "comma list of coloring orders")->required();
        sweep_cmd->add_option("--p-red", wa.p_red, "comma list of red probabilities");
        sweep_cmd->add_option("--seeds", wa.seeds, "seeds per cell");
        sweep_cmd->add_option("--seed-base", wa.seed_base);
        sweep_cmd->add_option("--rho", wa.rho);
        sweep_cmd->add_option("--budget", wa.budget);
        sweep_cmd->add_option("--clique-s", wa.clique_s);

        std::string manifest_path, check_path;
        auto * replay_cmd = app.add_subcommand("replay", "re-run a manifest (or an output embedding one)");
        replay_cmd->add_option("manifest", manifest_path)->required();
        replay_cmd->add_option("--check", check_path, "compare the re-run output with this file byte for byte");

        try
        {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp & e)
        {
            return app.exit(e, out, err);
        }
        catch (const CLI::CallForAllHelp & e)
        {
            return app.exit(e, out, err);
        }
        catch (const CLI::ParseError & e)
        {
            app.exit(e, out, err);
            return 1;
        }

        try
        {
            if (replay_cmd->parsed())
                return run_replay(manifest_path, check_path, out, err, out_path);

            Context ctx(strip_out(args));
            Output result;
            if (bounds_cmd->parsed())
                result = run_bounds(ba);
            else if (embed_cmd->parsed())
                result = run_embed(ctx, ea);
            else if (search_cmd->parsed())
                result = run_search(ctx, sa);
            else if (random_cmd->parsed())
                result = run_random(ctx, random_cmd->get_subcommands().front()->get_name(), ra);
            else if (oracle_cmd->parsed())
                result = run_oracle(ctx, oracle_cmd->get_subcommands().front()->get_name(), oa);
            else
                result = run_sweep(ctx, wa);

            std::string text;
            if (format == "csv")
            {
                if (! result.csv)
                    throw UsageError("--format csv is only available for bounds and sweep");
                text = *result.csv;
            }
            else
            {
                auto body = result.body;
                body["manifest"] = ctx.manifest();
                text = body.dump(2) + "\n";
            }
            write_output(out_path, text, out);
            return 0;
        }
        catch (const UsageError & e)
        {
            err << "usage error: " << e.what() << "\n";
            return 1;
        }
        catch (const InputError & e)
        {
            err << "input error: " << e.what() << "\n";
            return 2;
        }
        catch (const std::invalid_argument & e)
        {
            err << "input error: " << e.what() << "\n";
            return 2;
        }
    }
}
