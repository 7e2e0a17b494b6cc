#include "rdense/search.hpp"
#include "rdense/embedder.hpp"
#include "rdense/oracle.hpp"
#include "rdense/random_lab.hpp"
#include "rdense/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rdense::search
{
    auto ChaseState::letter_string() const -> std::string
    {
        std::string s;
        for (auto c : letters)
            s.push_back(color_letter(c));
        return s;
    }

    auto ChaseState::count(Color c) const -> std::size_t
    {
        return static_cast<std::size_t>(std::count(letters.begin(), letters.end(), c));
    }

    auto ChaseState::final_set() const -> const Bitset &
    {
        return sets.empty() ? start : sets.back();
    }

    auto ChaseState::pivots_with(Color c) const -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (letters[i] == c)
                out.push_back(pivots[i]);
        return out;
    }

    auto neighborhood_chase(const Coloring & coloring, const Bitset & start, double red_threshold, std::size_t stop_red,
                            std::size_t stop_blue) -> ChaseState
    {
        if (start.size() != coloring.order())
            throw std::invalid_argument("chase start set has the wrong universe size");
        ChaseState st;
        st.start = start;
        st.red_threshold = red_threshold;
        Bitset current = start;
        std::size_t reds = 0, blues = 0;
        while (reds < stop_red && blues < stop_blue && ! current.none())
        {
            auto u = static_cast<Vertex>(current.find_first());
            Bitset rest = current;
            rest.reset(u);
            Bitset red = rest & coloring.neighbours(u, Color::Red);
            Color letter;
            if (static_cast<double>(red.count()) >= red_threshold * static_cast<double>(rest.count()))
            {
                letter = Color::Red;
                current = std::move(red);
                ++reds;
            }
            else
            {
                letter = Color::Blue;
                current = rest & coloring.neighbours(u, Color::Blue);
                ++blues;
            }
            st.pivots.push_back(u);
            st.letters.push_back(letter);
            st.sets.push_back(current);
        }
        return st;
    }

    auto check_chase(const Coloring & coloring, const ChaseState & chase, std::size_t stop_red, std::size_t stop_blue)
        -> std::string
    {
        if (chase.pivots.size() != chase.letters.size() || chase.pivots.size() != chase.sets.size())
            return "trace arrays have different lengths";
        const Bitset * previous = &chase.start;
        std::size_t reds = 0, blues = 0;
        for (std::size_t i = 0; i < chase.pivots.size(); ++i)
        {
            auto p = chase.pivots[i];
            auto & next = chase.sets[i];
            if (reds >= stop_red || blues >= stop_blue)
                return "step " + std::to_string(i) + " taken after the stop count was reached";
            if (! previous->test(p))
                return "pivot " + std::to_string(i) + " is not in the current set";
            if (previous->find_first() != p)
                return "pivot " + std::to_string(i) + " is not the lowest vertex of the current set";
            if (next.test(p) || ! next.is_subset_of(*previous))
                return "set " + std::to_string(i + 1) + " is not nested inside set " + std::to_string(i) + " minus its pivot";
            if (! next.is_subset_of(coloring.neighbours(p, chase.letters[i])))
                return "set " + std::to_string(i + 1) + " is not joined to its pivot in the recorded colour";
            Bitset rest = *previous;
            rest.reset(p);
            auto red = rest.intersect_count(coloring.neighbours(p, Color::Red));
            bool says_red = static_cast<double>(red) >= chase.red_threshold * static_cast<double>(rest.count());
            if (says_red != (chase.letters[i] == Color::Red))
                return "letter " + std::to_string(i) + " disagrees with the threshold rule";
            if (next != (rest & coloring.neighbours(p, chase.letters[i])))
                return "set " + std::to_string(i + 1) + " is not the full neighbourhood in the recorded colour";
            (chase.letters[i] == Color::Red ? reds : blues)++;
            previous = &next;
        }
        if (reds < stop_red && blues < stop_blue && ! previous->none())
            return "chase stopped early";
        return {};
    }

    auto filter_high_blue_degree(const Coloring & coloring, const Bitset & a, const Bitset & b, double rho) -> Bitset
    {
        if (a.none() || b.none() || a.intersects(b))
            throw std::invalid_argument("filter_high_blue_degree needs disjoint nonempty sets");
        Bitset out(a.size());
        auto need = (1.0 - 2.0 * rho) * static_cast<double>(b.count());
        for (auto v = a.find_first(); v < a.size(); v = a.find_next(v + 1))
            if (static_cast<double>(coloring.neighbours(static_cast<Vertex>(v), Color::Blue).intersect_count(b)) >= need)
                out.set(v);
        return out;
    }

    auto common_neighborhood_pigeonhole(const Coloring & coloring, std::span<const Vertex> s, const Bitset & b,
                                        std::size_t l, Color color, PigeonholeMode mode, std::uint64_t budget)
        -> Pigeonhole
    {
        if (l > s.size())
            throw std::invalid_argument("pigeonhole: l exceeds |S|");
        std::vector<Vertex> sorted(s.begin(), s.end());
        std::sort(sorted.begin(), sorted.end());

        if (mode == PigeonholeMode::Exact)
        {
            if (random_lab::log2_binomial(sorted.size(), l) > std::log2(static_cast<double>(std::max<std::uint64_t>(budget, 1))) + 1e-9)
                throw std::invalid_argument("pigeonhole: C(|S|, l) exceeds the exact-mode budget");
            Pigeonhole best{{}, b};
            bool have = false;
            std::size_t best_count = 0;
            std::vector<Vertex> chosen;
            std::vector<Bitset> prefix{b};
            // depth-first over l-subsets in lexicographic order
            auto recurse = [&](auto & self, std::size_t from) -> void {
                if (chosen.size() == l)
                {
                    auto c = prefix.back().count();
                    if (! have || c > best_count)
                    {
                        have = true;
                        best_count = c;
                        best = {chosen, prefix.back()};
                    }
                    return;
                }
                for (auto i = from; i + (l - chosen.size()) <= sorted.size(); ++i)
                {
                    chosen.push_back(sorted[i]);
                    prefix.push_back(prefix.back() & coloring.neighbours(sorted[i], color));
                    self(self, i + 1);
                    prefix.pop_back();
                    chosen.pop_back();
                }
            };
            recurse(recurse, 0);
            return best;
        }

        std::vector<Vertex> t = sorted;
        auto common_of = [&](const std::vector<Vertex> & set, std::size_t skip) {
            Bitset c = b;
            for (std::size_t i = 0; i < set.size(); ++i)
                if (i != skip)
                    c &= coloring.neighbours(set[i], color);
            return c;
        };
        while (t.size() > l)
        {
            std::size_t best_i = 0, best_count = 0;
            for (std::size_t i = 0; i < t.size(); ++i)
            {
                auto c = common_of(t, i).count();
                if (i == 0 || c > best_count)
                {
                    best_i = i;
                    best_count = c;
                }
            }
            t.erase(t.begin() + static_cast<std::ptrdiff_t>(best_i));
        }
        return {t, common_of(t, t.size())};
    }

    auto split_high_degree(const Graph & h, double cap) -> DegreeSplit
    {
        if (! (cap > 0.0))
            throw std::invalid_argument("degree cap must be positive");
        DegreeSplit out;
        for (Vertex v = 0; v < h.order(); ++v)
            (static_cast<double>(h.degree(v)) > cap ? out.removed : out.kept).push_back(v);
        out.reduced = h.induced(out.kept);
        return out;
    }

    auto outcome_name(OutcomeKind k) -> const char *
    {
        switch (k)
        {
        case OutcomeKind::FoundRedH: return "FoundRedH";
        case OutcomeKind::FoundBlueClique: return "FoundBlueClique";
        case OutcomeKind::FoundMono: return "FoundMono";
        case OutcomeKind::Exhausted: return "Exhausted";
        }
        return "?";
    }

    auto verify_outcome(const Coloring & coloring, const Graph & h, std::size_t s, const SearchOutcome & outcome)
        -> std::string
    {
        switch (outcome.kind)
        {
        case OutcomeKind::Exhausted:
            return {};
        case OutcomeKind::FoundBlueClique:
        {
            if (outcome.clique.size() != s)
                return "blue clique has size " + std::to_string(outcome.clique.size()) + ", expected " + std::to_string(s);
            auto v = oracle::verify_clique(coloring.graph(Color::Blue), outcome.clique);
            return v.ok ? std::string{} : v.violation;
        }
        case OutcomeKind::FoundRedH:
        case OutcomeKind::FoundMono:
        {
            if (! outcome.embedding)
                return "found outcome without an embedding";
            auto c = outcome.kind == OutcomeKind::FoundRedH ? Color::Red : outcome.color;
            auto v = oracle::verify_embedding(h, coloring.graph(c), outcome.embedding->image);
            return v.ok ? std::string{} : v.violation;
        }
        }
        return "unknown outcome";
    }

    namespace
    {
        auto log2_two_over(double rho) -> double { return std::log2(2.0 / rho); }

        auto embed_delta(const SearchConfig & config) -> double
        {
            auto d = config.embed_delta > 0.0 ? config.embed_delta : config.rho;
            return std::clamp(d, 1e-9, 1.0);
        }

        auto random_graph_l(std::size_t size, double rho) -> std::size_t
        {
            auto frac = 1.0 - std::log2(15.0 / 14.0) / (2.0 * log2_two_over(rho));
            auto l = static_cast<std::size_t>(std::ceil(frac * static_cast<double>(size) - 1e-12));
            return std::min(l, size);
        }

        /// Result of a recursive step, in global vertex labels.
        struct Partial
        {
            enum class Kind
            {
                None,
                Red,
                Blue
            } kind = Kind::None;
            std::vector<Vertex> vertices;
        };

        class Recorder
        {
        public:
            Recorder(SearchTrace & trace, const SearchConfig & config) : trace_(trace), config_(config), seeds_(config.seed) {}

            auto enter(std::size_t depth) -> bool
            {
                ++trace_.nodes;
                trace_.deepest = std::max(trace_.deepest, depth);
                if (trace_.nodes > config_.node_budget)
                {
                    fail("node budget exhausted");
                    return false;
                }
                if (depth > config_.max_depth)
                {
                    fail("recursion depth limit reached");
                    return false;
                }
                return true;
            }

            void event(std::size_t depth, std::string kind, std::size_t set_size, std::size_t target, std::string detail = {})
            {
                trace_.events.push_back({depth, std::move(kind), set_size, target, std::move(detail)});
            }

            void fail(const std::string & reason)
            {
                if (trace_.reason.empty())
                    trace_.reason = reason;
            }

            auto next_seed() -> std::uint64_t { return seeds_.next_u64(); }

            SearchTrace & trace_;
            const SearchConfig & config_;

        private:
            Rng seeds_;
        };

        /// Greedy embedding of `pattern` into the red class restricted to `u`.
        auto embed_into(const Coloring & coloring, Color color, const Graph & pattern, const Bitset & u, double delta)
            -> std::optional<std::vector<Vertex>>
        {
            auto verts = u.to_vector();
            if (verts.size() < pattern.order())
                return std::nullopt;
            auto host = coloring.graph(color).induced(verts);
            auto res = embedder::embed_greedy(pattern, host, delta);
            if (! res.success())
                return std::nullopt;
            std::vector<Vertex> image;
            for (auto local : res.embedding->image)
                image.push_back(verts[local]);
            return image;
        }

        struct SparsePair
        {
            Bitset a, b;
        };

        auto sparse_red_pair(const Coloring & coloring, const Bitset & u, const SearchConfig & config, Recorder & rec)
            -> std::optional<SparsePair>
        {
            auto verts = u.to_vector();
            if (verts.size() < 2)
                return std::nullopt;
            auto host = coloring.graph(Color::Red).induced(verts);
            auto w = embedder::find_sparse_pair_heuristic(host, config.sigma, config.rho, config.sparse_pair_tries,
                                                          rec.next_seed());
            if (! w)
                return std::nullopt;
            SparsePair p{Bitset(coloring.order()), Bitset(coloring.order())};
            for (auto x : w->x)
                p.a.set(verts[x]);
            for (auto y : w->y)
                p.b.set(verts[y]);
            return p;
        }

        /// Red H or blue K_s inside U.
        class CliqueSearch
        {
        public:
            CliqueSearch(const Coloring & coloring, const Graph & h, const SearchConfig & config, Recorder & rec) :
                coloring_(coloring), h_(h), config_(config), rec_(rec)
            {
            }

            auto run(const Bitset & u, std::size_t s, std::size_t depth) -> Partial
            {
                if (s == 0)
                    return {Partial::Kind::Blue, {}};
                if (! rec_.enter(depth))
                    return {};
                auto size = u.count();
                rec_.event(depth, "enter", size, s);

                if (auto image = embed_into(coloring_, Color::Red, h_, u, embed_delta(config_)))
                {
                    rec_.event(depth, "embed-success", size, s);
                    return {Partial::Kind::Red, std::move(*image)};
                }
                rec_.event(depth, "embed-failure", size, s);

                if (s <= config_.base_s || random_lab::log2_binomial(size, s) <= std::log2(config_.base_enum_cap))
                {
                    auto clique = oracle::find_subgraph(coloring_.graph(Color::Blue), Graph::complete(s), &u);
                    rec_.event(depth, "base-case", size, s, clique ? "blue clique found" : "no blue clique");
                    if (clique)
                        return {Partial::Kind::Blue, std::move(clique->image)};
                    rec_.fail("base case: no blue K_" + std::to_string(s) + " in a set of " + std::to_string(size));
                    return {};
                }

                auto pair = sparse_red_pair(coloring_, u, config_, rec_);
                if (! pair)
                {
                    rec_.event(depth, "no-sparse-pair", size, s);
                    rec_.fail("embedding failed and no sparse red pair was found");
                    return {};
                }
                auto filtered = filter_high_blue_degree(coloring_, pair->a, pair->b, config_.rho);
                rec_.event(depth, "sparse-pair", size, s,
                           "|A|=" + std::to_string(pair->a.count()) + " |B|=" + std::to_string(pair->b.count()) +
                               " |A'|=" + std::to_string(filtered.count()));

                auto s1 = static_cast<std::size_t>(std::ceil(config_.clique_fraction * static_cast<double>(s) - 1e-12));
                s1 = std::clamp<std::size_t>(s1, 1, s - 1);
                if (static_cast<double>(s1) < config_.rho * static_cast<double>(h_.order()))
                    rec_.event(depth, "regime-change", size, s1, "recursion target below rho*t");
                auto first = run(filtered, s1, depth + 1);
                if (first.kind != Partial::Kind::Blue)
                    return first;

                std::size_t l = config_.l_rule == LRule::Half ? (s + 1) / 2 : random_graph_l(first.vertices.size(), config_.rho);
                l = std::min(l, first.vertices.size());
                auto mode = random_lab::log2_binomial(first.vertices.size(), l) <= std::log2(static_cast<double>(config_.pigeonhole_exact_cap))
                                ? PigeonholeMode::Exact
                                : PigeonholeMode::Greedy;
                auto ph = common_neighborhood_pigeonhole(coloring_, first.vertices, pair->b, l, Color::Blue, mode);
                rec_.event(depth, "pigeonhole", ph.common.count(), l, mode == PigeonholeMode::Exact ? "exact" : "greedy");

                auto second = run(ph.common, s - l, depth + 1);
                if (second.kind != Partial::Kind::Blue)
                    return second;
                auto clique = ph.t;
                clique.insert(clique.end(), second.vertices.begin(), second.vertices.end());
                rec_.event(depth, "assemble", clique.size(), s);
                return {Partial::Kind::Blue, std::move(clique)};
            }

        private:
            const Coloring & coloring_;
            const Graph & h_;
            const SearchConfig & config_;
            Recorder & rec_;
        };

        auto finish(SearchOutcome out, const Coloring & coloring, const Graph & h, std::size_t s) -> SearchOutcome
        {
            auto problem = verify_outcome(coloring, h, s, out);
            if (! problem.empty())
                throw std::logic_error(std::string("search produced an unverifiable ") + outcome_name(out.kind) + ": " + problem);
            if (! out.found() && out.trace.reason.empty())
                out.trace.reason = "search exhausted";
            return out;
        }

        auto swapped(const Coloring & c) -> Coloring { return Coloring(c.graph(Color::Blue)); }
    }

    auto find_red_H_or_blue_clique(const Coloring & coloring, const Graph & h, std::size_t s, const SearchConfig & config)
        -> SearchOutcome
    {
        if (s < 1)
            throw std::invalid_argument("clique size s must be at least 1");
        SearchOutcome out;
        Recorder rec(out.trace, config);
        CliqueSearch search(coloring, h, config, rec);
        auto r = search.run(Bitset::full(coloring.order()), s, 0);
        if (r.kind == Partial::Kind::Red)
        {
            out.kind = OutcomeKind::FoundRedH;
            out.color = Color::Red;
            out.embedding = Embedding{std::move(r.vertices)};
        }
        else if (r.kind == Partial::Kind::Blue)
        {
            out.kind = OutcomeKind::FoundBlueClique;
            out.color = Color::Blue;
            out.clique = std::move(r.vertices);
        }
        return finish(std::move(out), coloring, h, s);
    }

    auto find_mono_H(const Coloring & coloring, const Graph & h, const SearchConfig & config) -> SearchOutcome
    {
        SearchOutcome out;
        Recorder rec(out.trace, config);
        auto t = h.order();
        auto n = coloring.order();
        auto found_mono = [&](Color c, std::vector<Vertex> image) {
            out.kind = OutcomeKind::FoundMono;
            out.color = c;
            out.embedding = Embedding{std::move(image)};
            return finish(std::move(out), coloring, h, 0);
        };

        if (t == 0 || h.edge_count() == 0)
        {
            if (n >= t)
            {
                std::vector<Vertex> image(t);
                std::iota(image.begin(), image.end(), 0);
                rec.event(0, "edgeless-pattern", n, t);
                return found_mono(Color::Red, std::move(image));
            }
            rec.fail("host has fewer vertices than the pattern");
            return finish(std::move(out), coloring, h, 0);
        }

        auto rho = to_double(graph_stats(h).density);
        auto lg = log2_two_over(rho);
        auto cap = static_cast<double>(t) * std::sqrt(rho) / lg;
        auto split = split_high_degree(h, cap);
        rec.event(0, "split", split.kept.size(), split.removed.size(), "degree cap " + std::to_string(cap));

        auto stop = static_cast<std::size_t>(std::ceil(std::sqrt(rho) * lg * static_cast<double>(t) - 1e-12));
        auto stop_red = config.stop_red ? config.stop_red : stop;
        auto stop_blue = config.stop_blue ? config.stop_blue : stop;
        auto chase = neighborhood_chase(coloring, Bitset::full(n), 0.5, stop_red, stop_blue);
        out.trace.chases.push_back(chase);
        auto reds = chase.count(Color::Red), blues = chase.count(Color::Blue);
        Color c;
        if (reds >= stop_red)
            c = Color::Red;
        else if (blues >= stop_blue)
            c = Color::Blue;
        else
            c = blues > reds ? Color::Blue : Color::Red;
        auto pivot_clique = chase.pivots_with(c);
        auto & final_set = chase.final_set();
        rec.event(0, "chase", final_set.count(), pivot_clique.size(), chase.letter_string());

        // the c-pivots alone already form a c-clique
        if (pivot_clique.size() >= t)
        {
            rec.event(0, "pivot-clique", pivot_clique.size(), t);
            return found_mono(c, std::vector<Vertex>(pivot_clique.begin(), pivot_clique.begin() + static_cast<std::ptrdiff_t>(t)));
        }

        if (split.removed.size() <= pivot_clique.size() && ! final_set.none())
        {
            // inner search with c playing the role of red
            auto inner_coloring = c == Color::Red ? coloring : swapped(coloring);
            auto verts = final_set.to_vector();
            auto sub = inner_coloring.induced(verts);
            auto inner_config = config;
            auto inner = find_red_H_or_blue_clique(sub, split.reduced, t, inner_config);
            for (auto & e : inner.trace.events)
                rec.event(e.depth + 1, e.kind, e.set_size, e.target, e.detail);
            out.trace.nodes += inner.trace.nodes;
            if (inner.kind == OutcomeKind::FoundRedH)
            {
                std::vector<Vertex> image(t);
                for (std::size_t i = 0; i < split.kept.size(); ++i)
                    image[split.kept[i]] = verts[inner.embedding->image[i]];
                for (std::size_t j = 0; j < split.removed.size(); ++j)
                    image[split.removed[j]] = pivot_clique[j];
                rec.event(0, "assemble", final_set.count(), t, "stripped vertices attached to the pivot clique");
                return found_mono(c, std::move(image));
            }
            if (inner.kind == OutcomeKind::FoundBlueClique)
            {
                std::vector<Vertex> image;
                for (auto v : inner.clique)
                    image.push_back(verts[v]);
                rec.event(0, "opposite-clique", final_set.count(), t);
                return found_mono(opposite(c), std::move(image));
            }
            rec.fail(inner.trace.reason);
        }
        else
            rec.event(0, "skip-inner", final_set.count(), split.removed.size(), "not enough pivots or empty final set");

        // exhaustive pass: whole colouring when small, else the chase's own vertices
        Bitset chase_vertices = final_set;
        for (auto p : chase.pivots)
            chase_vertices.set(p);
        if (n <= config.chase_base_cap)
            chase_vertices = Bitset::full(n);
        if (chase_vertices.count() <= config.chase_base_cap)
        {
            for (auto colour : {Color::Red, Color::Blue})
                if (auto e = oracle::find_subgraph(coloring.graph(colour), h, &chase_vertices))
                {
                    rec.event(0, "chase-base-case", chase_vertices.count(), t, color_name(colour));
                    return found_mono(colour, std::move(e->image));
                }
            rec.event(0, "chase-base-case", chase_vertices.count(), t, "none");
            out.trace.reason = "exhaustive pass found no monochromatic copy";
        }
        else
            rec.fail("inner search exhausted and the chase set is too large for the exhaustive pass");
        return finish(std::move(out), coloring, h, 0);
    }

    namespace
    {
        /// Two-sided recursion: blue copy of h1 or red copy of h2 inside W.
        class BoundedSearch
        {
        public:
            BoundedSearch(const Coloring & coloring, const SearchConfig & config, Recorder & rec) :
                coloring_(coloring), config_(config), rec_(rec)
            {
            }

            auto run(const Bitset & w, const Graph & h1, const Graph & h2, std::size_t depth) -> Partial
            {
                if (h2.order() == 0)
                    return {Partial::Kind::Red, {}};
                if (h1.order() == 0)
                    return {Partial::Kind::Blue, {}};
                if (! rec_.enter(depth))
                    return {};
                auto size = w.count();
                rec_.event(depth, "enter", size, h1.order(), "blue target " + std::to_string(h1.order()) + ", red target " + std::to_string(h2.order()));
                if (h1.order() == 1 && size >= 1)
                    return {Partial::Kind::Blue, {static_cast<Vertex>(w.find_first())}};

                if (size <= config_.chase_base_cap)
                {
                    if (auto e = oracle::find_subgraph(coloring_.graph(Color::Blue), h1, &w))
                    {
                        rec_.event(depth, "base-case", size, h1.order(), "blue copy");
                        return {Partial::Kind::Blue, std::move(e->image)};
                    }
                    if (auto e = oracle::find_subgraph(coloring_.graph(Color::Red), h2, &w))
                    {
                        rec_.event(depth, "base-case", size, h2.order(), "red copy");
                        return {Partial::Kind::Red, std::move(e->image)};
                    }
                    rec_.event(depth, "base-case", size, h1.order(), "none");
                    rec_.fail("base case: neither target present in a set of " + std::to_string(size));
                    return {};
                }

                if (auto image = embed_into(coloring_, Color::Red, h2, w, embed_delta(config_)))
                {
                    rec_.event(depth, "embed-success", size, h2.order());
                    return {Partial::Kind::Red, std::move(*image)};
                }
                rec_.event(depth, "embed-failure", size, h2.order());

                auto pair = sparse_red_pair(coloring_, w, config_, rec_);
                if (! pair)
                {
                    rec_.event(depth, "no-sparse-pair", size, h2.order());
                    rec_.fail("embedding failed and no sparse red pair was found");
                    return {};
                }
                auto filtered = filter_high_blue_degree(coloring_, pair->a, pair->b, config_.rho);
                rec_.event(depth, "sparse-pair", size, h1.order(),
                           "|A|=" + std::to_string(pair->a.count()) + " |B|=" + std::to_string(pair->b.count()) +
                               " |A'|=" + std::to_string(filtered.count()));

                auto part = random_lab::judicious_partition(h1, 64, rec_.next_seed());
                auto v1 = part.part1, v2 = part.part2;
                if (v1.size() > v2.size())
                    std::swap(v1, v2);
                rec_.event(depth, "partition", v1.size(), v2.size(), part.accepted ? "accepted" : "best attempt, not accepted");
                if (v1.empty())
                {
                    rec_.fail("bisection left an empty part");
                    return {};
                }
                auto h1_small = h1.induced(v1);
                auto first = run(filtered, h1_small, h2, depth + 1);
                if (first.kind != Partial::Kind::Blue)
                    return first;

                // first.vertices[i] is the image of v1[i]
                auto l = random_graph_l(v1.size(), config_.rho);
                auto mode = random_lab::log2_binomial(v1.size(), l) <= std::log2(static_cast<double>(config_.pigeonhole_exact_cap))
                                ? PigeonholeMode::Exact
                                : PigeonholeMode::Greedy;
                auto ph = common_neighborhood_pigeonhole(coloring_, first.vertices, pair->b, l, Color::Blue, mode);
                rec_.event(depth, "pigeonhole", ph.common.count(), l, mode == PigeonholeMode::Exact ? "exact" : "greedy");

                Bitset in_t = Bitset::from(coloring_.order(), ph.t);
                std::vector<Vertex> k_part, k_image, rest;
                Bitset in_k(h1.order());
                for (std::size_t i = 0; i < v1.size(); ++i)
                    if (in_t.test(first.vertices[i]))
                    {
                        in_k.set(v1[i]);
                        k_part.push_back(v1[i]);
                        k_image.push_back(first.vertices[i]);
                    }
                for (Vertex x = 0; x < h1.order(); ++x)
                    if (! in_k.test(x))
                        rest.push_back(x);
                if (k_part.empty())
                {
                    rec_.fail("pigeonhole step made no progress");
                    return {};
                }
                auto h1_rest = h1.induced(rest);
                auto second = run(ph.common, h1_rest, h2, depth + 1);
                if (second.kind != Partial::Kind::Blue)
                    return second;

                std::vector<Vertex> image(h1.order());
                for (std::size_t i = 0; i < k_part.size(); ++i)
                    image[k_part[i]] = k_image[i];
                for (std::size_t i = 0; i < rest.size(); ++i)
                    image[rest[i]] = second.vertices[i];
                rec_.event(depth, "assemble", image.size(), h1.order());
                return {Partial::Kind::Blue, std::move(image)};
            }

        private:
            const Coloring & coloring_;
            const SearchConfig & config_;
            Recorder & rec_;
        };
    }

    auto find_random_graph_mono(const Coloring & coloring, const Graph & h, const BoundedGraphWitness & witness,
                                const SearchConfig & config) -> SearchOutcome
    {
        validate_witness(h, witness);
        SearchOutcome out;
        Recorder rec(out.trace, config);
        auto t = h.order();
        auto n = coloring.order();
        auto found_mono = [&](Color c, std::vector<Vertex> image) {
            out.kind = OutcomeKind::FoundMono;
            out.color = c;
            out.embedding = Embedding{std::move(image)};
            return finish(std::move(out), coloring, h, 0);
        };
        if (t == 0 || (t == 1 && n >= 1))
            return found_mono(Color::Red, std::vector<Vertex>(t, 0));

        Bitset exceptional = Bitset::from(t, witness.exceptional);
        std::vector<Vertex> exc = exceptional.to_vector(), kept;
        for (Vertex v = 0; v < t; ++v)
            if (! exceptional.test(v))
                kept.push_back(v);
        auto q = exc.size();
        auto reduced = h.induced(kept);
        auto clique_image = [&](const std::vector<Vertex> & clique) {
            return std::vector<Vertex>(clique.begin(), clique.begin() + static_cast<std::ptrdiff_t>(t));
        };

        Bitset w = Bitset::full(n);
        std::vector<Vertex> red_pivots, blue_pivots;
        if (q > 0)
        {
            auto first = neighborhood_chase(coloring, w, config.rho, q, t - 1);
            out.trace.chases.push_back(first);
            rec.event(0, "chase", first.final_set().count(), q, first.letter_string());
            if (first.count(Color::Blue) >= t - 1 && ! first.final_set().none())
            {
                auto clique = first.pivots_with(Color::Blue);
                clique.push_back(static_cast<Vertex>(first.final_set().find_first()));
                return found_mono(Color::Blue, clique_image(clique));
            }
            if (first.count(Color::Red) < q)
            {
                rec.fail("first chase ran out before collecting the exceptional pivots");
                return finish(std::move(out), coloring, h, 0);
            }
            red_pivots = first.pivots_with(Color::Red);
            if (reduced.order() == 0)
            {
                rec.event(0, "assemble", q, t, "all vertices exceptional");
                return found_mono(Color::Red, red_pivots);
            }

            // same process with the colours reversed, inside the final set
            auto reversed = swapped(coloring);
            auto second = neighborhood_chase(reversed, first.final_set(), config.rho, q, t - 1);
            out.trace.chases.push_back(second);
            rec.event(0, "chase-reversed", second.final_set().count(), q, second.letter_string());
            if (second.count(Color::Blue) >= t - 1 && ! second.final_set().none())
            {
                // "blue" letters of the reversed chase are original red
                auto clique = second.pivots_with(Color::Blue);
                clique.push_back(static_cast<Vertex>(second.final_set().find_first()));
                return found_mono(Color::Red, clique_image(clique));
            }
            if (second.count(Color::Red) < q)
            {
                rec.fail("reversed chase ran out before collecting the exceptional pivots");
                return finish(std::move(out), coloring, h, 0);
            }
            blue_pivots = second.pivots_with(Color::Red);
            w = second.final_set();
        }

        BoundedSearch search(coloring, config, rec);
        auto r = search.run(w, reduced, reduced, 1);
        if (r.kind == Partial::Kind::None)
            return finish(std::move(out), coloring, h, 0);

        auto colour = r.kind == Partial::Kind::Red ? Color::Red : Color::Blue;
        auto & pivots = colour == Color::Red ? red_pivots : blue_pivots;
        std::vector<Vertex> image(t);
        for (std::size_t i = 0; i < kept.size(); ++i)
            image[kept[i]] = r.vertices[i];
        for (std::size_t j = 0; j < exc.size(); ++j)
            image[exc[j]] = pivots[j];
        rec.event(0, "assemble", w.count(), t, std::string("exceptional vertices on the ") + color_name(colour) + " pivots");
        return found_mono(colour, std::move(image));
    }
}
