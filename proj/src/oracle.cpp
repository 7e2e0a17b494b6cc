#include "rdense/oracle.hpp"
#include "rdense/random_lab.hpp"
#include "rdense/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rdense::oracle
{
    namespace
    {
        /// Backtracking matcher over adjacency rows. `order` lists pattern
        /// vertices in placement order; every vertex's already-placed
        /// neighbours restrict its candidates.
        class Matcher
        {
        public:
            Matcher(std::span<const Bitset> rows, const Graph & pattern, std::vector<Vertex> order, const Bitset * allowed) :
                rows_(rows),
                pattern_(pattern),
                order_(std::move(order)),
                image_(pattern.order(), 0),
                used_(rows.size()),
                scratch_(order_.size(), Bitset(rows.size())),
                base_(allowed ? *allowed : Bitset::full(rows.size()))
            {
                std::vector<std::size_t> position(pattern.order());
                for (std::size_t k = 0; k < order_.size(); ++k)
                    position[order_[k]] = k;
                earlier_.resize(order_.size());
                for (std::size_t k = 0; k < order_.size(); ++k)
                    for (std::size_t j = 0; j < k; ++j)
                        if (pattern.adjacent(order_[k], order_[j]))
                            earlier_[k].push_back(order_[j]);
            }

            /// Search with the first `fixed` positions of the order pinned to `pins`.
            auto run(std::span<const Vertex> pins) -> std::optional<Embedding>
            {
                for (std::size_t k = 0; k < pins.size(); ++k)
                {
                    auto x = order_[k];
                    auto v = pins[k];
                    if (used_.test(v) || ! base_.test(v))
                        return reset(k), std::nullopt;
                    for (auto y : earlier_[k])
                        if (! rows_[image_[y]].test(v))
                            return reset(k), std::nullopt;
                    image_[x] = v;
                    used_.set(v);
                }
                bool ok = search(pins.size());
                std::optional<Embedding> result;
                if (ok)
                    result = Embedding{image_};
                reset(pins.size());
                return result;
            }

        private:
            void reset(std::size_t placed)
            {
                for (std::size_t k = 0; k < placed; ++k)
                    used_.reset(image_[order_[k]]);
            }

            auto search(std::size_t k) -> bool
            {
                if (k == order_.size())
                    return true;
                auto x = order_[k];
                auto & cand = scratch_[k];
                cand = base_;
                cand.subtract(used_);
                for (auto y : earlier_[k])
                    cand &= rows_[image_[y]];
                auto need = pattern_.degree(x);
                for (auto v = cand.find_first(); v < cand.size(); v = cand.find_next(v + 1))
                {
                    if (rows_[v].count() < need)
                        continue;
                    image_[x] = static_cast<Vertex>(v);
                    used_.set(v);
                    if (search(k + 1))
                        return true;
                    used_.reset(v);
                }
                return false;
            }

            std::span<const Bitset> rows_;
            const Graph & pattern_;
            std::vector<Vertex> order_;
            std::vector<std::vector<Vertex>> earlier_;
            std::vector<Vertex> image_;
            Bitset used_;
            std::vector<Bitset> scratch_;
            Bitset base_;
        };

        auto degree_order(const Graph & pattern) -> std::vector<Vertex>
        {
            std::vector<Vertex> order(pattern.order());
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(),
                             [&](Vertex a, Vertex b) { return pattern.degree(a) > pattern.degree(b); });
            return order;
        }

        /// Starts with `first`, then repeatedly takes the vertex with most
        /// placed neighbours (ties: higher degree, then lower index).
        auto connected_order(const Graph & pattern, std::vector<Vertex> first) -> std::vector<Vertex>
        {
            Bitset placed(pattern.order());
            for (auto v : first)
                placed.set(v);
            auto order = std::move(first);
            while (order.size() < pattern.order())
            {
                Vertex best = 0;
                std::size_t best_links = 0, best_degree = 0;
                bool have = false;
                for (Vertex v = 0; v < pattern.order(); ++v)
                {
                    if (placed.test(v))
                        continue;
                    auto links = pattern.neighbours(v).intersect_count(placed);
                    auto deg = pattern.degree(v);
                    if (! have || links > best_links || (links == best_links && deg > best_degree))
                    {
                        best = v;
                        best_links = links;
                        best_degree = deg;
                        have = true;
                    }
                }
                placed.set(best);
                order.push_back(best);
            }
            return order;
        }
    }

    auto find_subgraph(std::span<const Bitset> rows, const Graph & pattern, const Bitset * allowed)
        -> std::optional<Embedding>
    {
        if (pattern.order() > rows.size())
            return std::nullopt;
        Matcher m(rows, pattern, degree_order(pattern), allowed);
        return m.run({});
    }

    auto find_subgraph(const Graph & host, const Graph & pattern, const Bitset * allowed) -> std::optional<Embedding>
    {
        return find_subgraph(host.rows(), pattern, allowed);
    }

    auto has_subgraph_through_edge(std::span<const Bitset> rows, const Graph & pattern, Vertex u, Vertex v) -> bool
    {
        if (pattern.order() > rows.size())
            return false;
        for (auto [a, b] : pattern.edges())
        {
            Matcher m(rows, pattern, connected_order(pattern, {a, b}), nullptr);
            Vertex forward[2] = {u, v};
            if (m.run(forward))
                return true;
            Vertex backward[2] = {v, u};
            if (m.run(backward))
                return true;
        }
        return false;
    }

    auto find_mono_subgraph_exact(const Coloring & coloring, const Graph & pattern, Color color)
        -> std::optional<Embedding>
    {
        return find_subgraph(coloring.graph(color), pattern);
    }

    auto verify_embedding(const Graph & pattern, const Graph & host, std::span<const Vertex> image) -> Verification
    {
        if (image.size() != pattern.order())
            throw std::invalid_argument("embedding map is not total on the pattern");
        Bitset seen(host.order());
        for (Vertex x = 0; x < image.size(); ++x)
        {
            if (image[x] >= host.order())
                return {false, "image of " + std::to_string(x) + " is outside the host"};
            if (seen.test(image[x]))
                return {false, "repeated image " + std::to_string(image[x]) + " at pattern vertex " + std::to_string(x)};
            seen.set(image[x]);
        }
        for (auto [a, b] : pattern.edges())
            if (! host.adjacent(image[a], image[b]))
                return {false, "pattern edge " + std::to_string(a) + "-" + std::to_string(b) + " maps to non-edge " +
                                   std::to_string(image[a]) + "-" + std::to_string(image[b])};
        return {};
    }

    auto verify_embedding(const Graph & pattern, const Coloring & host, Color color, std::span<const Vertex> image)
        -> Verification
    {
        return verify_embedding(pattern, host.graph(color), image);
    }

    auto verify_clique(const Graph & host, std::span<const Vertex> vertices) -> Verification
    {
        return verify_embedding(Graph::complete(vertices.size()), host, vertices);
    }

    auto avoids(const Coloring & coloring, const Graph & h1, const Graph & h2) -> bool
    {
        return ! find_mono_subgraph_exact(coloring, h1, Color::Blue) && ! find_mono_subgraph_exact(coloring, h2, Color::Red);
    }

    namespace
    {
        class AvoidingSearch
        {
        public:
            AvoidingSearch(const Graph & h1, const Graph & h2, std::size_t n, std::uint64_t & nodes) :
                h1_(h1), h2_(h2), n_(n), red_(n, Bitset(n)), blue_(n, Bitset(n)), nodes_(nodes)
            {
                for (Vertex v = 1; v < n; ++v)
                    for (Vertex u = 0; u < v; ++u)
                        edges_.emplace_back(u, v);
            }

            auto run() -> std::optional<Coloring>
            {
                auto all_blue = Coloring::all(n_, Color::Blue);
                if (avoids(all_blue, h1_, h2_))
                    return all_blue;
                if (edges_.empty())
                    return std::nullopt;
                if (dfs(0))
                    return Coloring(Graph::from_rows(red_));
                return std::nullopt;
            }

        private:
            auto dfs(std::size_t e) -> bool
            {
                ++nodes_;
                if (e == edges_.size())
                    return avoids(Coloring(Graph::from_rows(red_)), h1_, h2_);
                auto [u, v] = edges_[e];
                for (auto c : {Color::Red, Color::Blue})
                {
                    if (e == 0 && c == Color::Blue)
                        break;
                    auto & rows = c == Color::Red ? red_ : blue_;
                    auto & target = c == Color::Red ? h2_ : h1_;
                    rows[u].set(v);
                    rows[v].set(u);
                    bool closed = target.edge_count() > 0 && has_subgraph_through_edge(rows, target, u, v);
                    if (! closed && dfs(e + 1))
                        return true;
                    rows[u].reset(v);
                    rows[v].reset(u);
                }
                return false;
            }

            const Graph & h1_;
            const Graph & h2_;
            std::size_t n_;
            std::vector<Bitset> red_, blue_;
            std::vector<Edge> edges_;
            std::uint64_t & nodes_;
        };
    }

    auto ramsey_number_exact(const Graph & h1, const Graph & h2, std::size_t n_max, RamseyOptions options)
        -> RamseyCertificate
    {
        RamseyCertificate cert;
        if (n_max > options.guard)
        {
            cert.refused = true;
            cert.refusal = "n_max " + std::to_string(n_max) + " exceeds the enumeration guard " + std::to_string(options.guard);
            return cert;
        }
        if (h1.order() == 0 || h2.order() == 0)
            throw std::invalid_argument("patterns must have at least one vertex");
        for (std::size_t n = 1; n <= n_max; ++n)
        {
            // an edgeless target of order <= n is present in every colouring
            if ((h1.edge_count() == 0 && h1.order() <= n) || (h2.edge_count() == 0 && h2.order() <= n))
            {
                cert.value = n;
                return cert;
            }
            AvoidingSearch search(h1, h2, n, cert.nodes);
            if (auto found = search.run())
            {
                cert.lower_n = n;
                cert.witness = std::move(found);
            }
            else
            {
                cert.value = n;
                return cert;
            }
        }
        return cert;
    }

    auto lower_bound_certificate_random(const Graph & pattern, std::size_t n, std::uint64_t tries, std::uint64_t seed,
                                        double p_red) -> LowerCertificate
    {
        LowerCertificate out;
        Rng seeds(seed);
        for (std::uint64_t i = 0; i < tries; ++i)
        {
            out.tries_used = i + 1;
            auto coloring = random_lab::sample_coloring(n, p_red, seeds.next_u64());
            if (! find_mono_subgraph_exact(coloring, pattern, Color::Red) &&
                ! find_mono_subgraph_exact(coloring, pattern, Color::Blue))
            {
                out.coloring = std::move(coloring);
                return out;
            }
        }
        return out;
    }

    auto check_bidense_bruteforce(const Graph & host, double sigma, double delta) -> BiDensityResult
    {
        BiDensityResult result;
        auto n = host.order();
        if (n > 12)
        {
            result.status = BiDensityStatus::TooLarge;
            return result;
        }
        auto s = min_part_size(sigma, n);
        result.part_size = s;
        std::vector<std::uint32_t> row(n, 0);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
                if (host.adjacent(u, v))
                    row[u] |= 1u << v;

        std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
        for (std::uint32_t x = 1; x <= all; ++x)
        {
            auto a = static_cast<std::size_t>(std::popcount(x));
            if (a < s)
                continue;
            std::uint32_t rest = all & ~x;
            // submasks of rest, ascending
            for (std::uint32_t y = (rest & -rest); y; y = (y - rest) & rest)
            {
                auto b = static_cast<std::size_t>(std::popcount(y));
                if (b < s)
                    continue;
                ++result.pairs_checked;
                std::size_t e = 0;
                for (std::uint32_t xs = x; xs; xs &= xs - 1)
                    e += static_cast<std::size_t>(std::popcount(row[std::countr_zero(xs)] & y));
                if (below_density(e, a, b, delta))
                {
                    BiDensityWitness w;
                    for (Vertex v = 0; v < n; ++v)
                    {
                        if (x >> v & 1)
                            w.x.push_back(v);
                        if (y >> v & 1)
                            w.y.push_back(v);
                    }
                    w.density = Rational(static_cast<std::int64_t>(e), static_cast<std::int64_t>(a * b));
                    w.sigma = sigma;
                    w.delta = delta;
                    result.status = BiDensityStatus::Witness;
                    result.witness = std::move(w);
                    return result;
                }
            }
        }
        return result;
    }

    auto enumerate_graphs(std::size_t t, bool isolated_free_only) -> std::vector<Graph>
    {
        if (t == 0 || t > 6)
            throw std::invalid_argument("enumerate_graphs supports 1 <= t <= 6");
        std::vector<Edge> pairs;
        for (Vertex u = 0; u < t; ++u)
            for (Vertex v = u + 1; v < t; ++v)
                pairs.emplace_back(u, v);
        std::vector<std::vector<int>> index(t, std::vector<int>(t, -1));
        for (std::size_t i = 0; i < pairs.size(); ++i)
        {
            index[pairs[i].first][pairs[i].second] = static_cast<int>(i);
            index[pairs[i].second][pairs[i].first] = static_cast<int>(i);
        }
        std::vector<std::vector<Vertex>> perms;
        std::vector<Vertex> p(t);
        std::iota(p.begin(), p.end(), 0);
        do
            perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));

        std::vector<Graph> out;
        std::uint32_t total = 1u << pairs.size();
        for (std::uint32_t mask = 0; mask < total; ++mask)
        {
            bool canonical = true;
            for (auto & perm : perms)
            {
                std::uint32_t image = 0;
                for (std::size_t i = 0; i < pairs.size(); ++i)
                    if (mask >> i & 1)
                        image |= 1u << index[perm[pairs[i].first]][perm[pairs[i].second]];
                if (image < mask)
                {
                    canonical = false;
                    break;
                }
            }
            if (! canonical)
                continue;
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1)
                    edges.push_back(pairs[i]);
            auto g = Graph::from_edges(t, edges);
            if (! isolated_free_only || g.isolated_free())
                out.push_back(std::move(g));
        }
        return out;
    }
}
