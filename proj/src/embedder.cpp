#include "rdense/embedder.hpp"
#include "rdense/oracle.hpp"
#include "rdense/random_lab.hpp"
#include "rdense/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rdense::embedder
{
    auto greedy_partition(const Graph & h, std::size_t k) -> PartitionResult
    {
        PartitionResult r;
        r.parts.resize(k);
        std::vector<Bitset> members(k, Bitset(h.order()));
        for (Vertex v = 0; v < h.order(); ++v)
        {
            bool placed = false;
            for (std::size_t p = 0; p < k && ! placed; ++p)
                if (! h.neighbours(v).intersects(members[p]))
                {
                    members[p].set(v);
                    r.parts[p].push_back(v);
                    placed = true;
                }
            if (! placed)
            {
                r.stuck = v;
                return r;
            }
        }
        r.ok = true;
        return r;
    }

    auto lemma_sigma(double delta, std::size_t max_degree) -> double
    {
        if (max_degree == 0)
            throw std::invalid_argument("lemma_sigma needs max degree >= 1");
        auto d = static_cast<double>(max_degree);
        return std::pow(delta, d) / (4.0 * d * d);
    }

    auto host_size_check(std::size_t host_order, std::size_t pattern_order, std::size_t max_degree, double delta)
        -> HostSizeCheck
    {
        HostSizeCheck c;
        auto d = static_cast<double>(max_degree);
        auto scale = std::pow(delta, -d);
        c.part_size = host_order / (max_degree + 1);
        c.part_size_sufficient = static_cast<double>(c.part_size) >= 2.0 * scale * static_cast<double>(pattern_order);
        c.order_sufficient = static_cast<double>(host_order) >= 4.0 * scale * d * static_cast<double>(pattern_order);
        return c;
    }

    auto embed_greedy(const Graph & pattern, const Graph & host, double delta, const EmbedOptions & options)
        -> EmbedResult
    {
        if (! (delta > 0.0 && delta <= 1.0))
            throw std::invalid_argument("delta must lie in (0, 1]");
        auto n = pattern.order();
        auto max_deg = pattern.max_degree();
        auto k = max_deg + 1;

        std::vector<Bitset> host_parts;
        std::size_t part_size;
        if (options.host_parts)
        {
            auto & given = *options.host_parts;
            if (given.size() != k)
                throw std::invalid_argument("host partition must have max degree + 1 parts");
            part_size = given.empty() ? 0 : given[0].size();
            Bitset seen(host.order());
            for (auto & part : given)
            {
                if (part.size() != part_size)
                    throw std::invalid_argument("host parts must have equal size");
                Bitset b(host.order());
                for (auto v : part)
                {
                    if (v >= host.order() || seen.test(v))
                        throw std::invalid_argument("host parts must be disjoint and in range");
                    seen.set(v);
                    b.set(v);
                }
                host_parts.push_back(std::move(b));
            }
        }
        else
        {
            part_size = host.order() / k;
            for (std::size_t p = 0; p < k; ++p)
            {
                Bitset b(host.order());
                for (std::size_t i = 0; i < part_size; ++i)
                    b.set(p * part_size + i);
                host_parts.push_back(std::move(b));
            }
        }

        auto coloring = greedy_partition(pattern, k);
        if (! coloring.ok)
            throw std::logic_error("greedy colouring with max degree + 1 parts failed");
        std::vector<std::size_t> part_of(n);
        for (std::size_t p = 0; p < k; ++p)
            for (auto x : coloring.parts[p])
                part_of[x] = p;

        EmbedResult result;
        auto & trace = result.trace;
        trace.part_size = part_size;
        trace.sizes = host_size_check(host.order(), n, max_deg, delta);
        trace.order.resize(n);
        std::iota(trace.order.begin(), trace.order.end(), 0);
        std::stable_sort(trace.order.begin(), trace.order.end(),
                         [&](Vertex a, Vertex b) { return pattern.degree(a) > pattern.degree(b); });

        std::vector<Bitset> candidates(n);
        std::vector<std::size_t> placed_neighbours(n, 0);
        for (Vertex y = 0; y < n; ++y)
            candidates[y] = host_parts[part_of[y]];
        Bitset placed(n);
        Bitset used(host.order());
        std::vector<Vertex> image(n, 0);

        for (std::size_t h = 0; h < n; ++h)
        {
            auto w = trace.order[h];
            EmbedStep step{w, std::nullopt, 0, {}, true};
            std::vector<Vertex> unplaced_neighbours;
            for (auto y = pattern.neighbours(w).find_first(); y < n; y = pattern.neighbours(w).find_next(y + 1))
                if (! placed.test(y))
                    unplaced_neighbours.push_back(static_cast<Vertex>(y));

            Bitset available = candidates[w];
            available.subtract(used);
            for (auto v = available.find_first(); v < host.order(); v = available.find_next(v + 1))
            {
                bool good = std::all_of(unplaced_neighbours.begin(), unplaced_neighbours.end(), [&](Vertex y) {
                    auto & ty = candidates[y];
                    return static_cast<double>(host.neighbours(static_cast<Vertex>(v)).intersect_count(ty)) >=
                           delta * static_cast<double>(ty.count());
                });
                if (good)
                {
                    step.host_vertex = static_cast<Vertex>(v);
                    break;
                }
                ++step.rejected;
            }

            if (! step.host_vertex)
            {
                trace.steps.push_back(std::move(step));
                result.failure = FailureReport{h, w, available.count()};
                return result;
            }

            auto v = *step.host_vertex;
            image[w] = v;
            used.set(v);
            placed.set(w);
            for (auto y : unplaced_neighbours)
            {
                candidates[y] &= host.neighbours(v);
                ++placed_neighbours[y];
            }
            for (Vertex y = 0; y < n; ++y)
            {
                if (placed.test(y))
                    continue;
                auto required = std::pow(delta, static_cast<double>(placed_neighbours[y])) * static_cast<double>(part_size);
                auto size = candidates[y].count();
                step.candidates.push_back({y, size, placed_neighbours[y], required});
                if (static_cast<double>(size) < required)
                    step.invariant_held = false;
            }
            trace.invariant_held = trace.invariant_held && step.invariant_held;
            trace.steps.push_back(std::move(step));
        }

        auto check = oracle::verify_embedding(pattern, host, image);
        if (! check.ok)
            throw std::logic_error("greedy embedding failed verification: " + check.violation);
        result.embedding = Embedding{std::move(image)};
        return result;
    }

    auto embed_greedy(const Graph & pattern, const Coloring & host, Color color, double delta,
                      const EmbedOptions & options) -> EmbedResult
    {
        return embed_greedy(pattern, host.graph(color), delta, options);
    }

    auto check_bidense_exact(const Graph & host, double sigma, double delta, std::uint64_t budget) -> BiDensityResult
    {
        BiDensityResult result;
        auto n = host.order();
        auto s = min_part_size(sigma, n);
        result.part_size = s;
        if (2 * s > n)
            return result;
        auto log_pairs = 2.0 * random_lab::log2_binomial(n, s);
        if (log_pairs > std::log2(static_cast<double>(std::max<std::uint64_t>(budget, 1))) + 1e-9)
        {
            result.status = BiDensityStatus::TooLarge;
            return result;
        }

        auto next_combination = [](std::vector<std::size_t> & c, std::size_t pool) {
            auto k = c.size();
            std::size_t i = k;
            while (i > 0 && c[i - 1] == pool - k + i - 1)
                --i;
            if (i == 0)
                return false;
            ++c[i - 1];
            for (auto j = i; j < k; ++j)
                c[j] = c[j - 1] + 1;
            return true;
        };

        std::vector<std::size_t> xc(s);
        std::iota(xc.begin(), xc.end(), 0);
        std::vector<std::size_t> into_x(n);
        std::vector<Vertex> rest;
        std::vector<std::size_t> yc(s);
        do
        {
            Bitset xs(n);
            for (auto i : xc)
                xs.set(i);
            for (Vertex v = 0; v < n; ++v)
                into_x[v] = host.neighbours(v).intersect_count(xs);
            rest.clear();
            for (Vertex v = 0; v < n; ++v)
                if (! xs.test(v))
                    rest.push_back(v);
            std::iota(yc.begin(), yc.end(), 0);
            do
            {
                ++result.pairs_checked;
                std::size_t e = 0;
                for (auto i : yc)
                    e += into_x[rest[i]];
                if (below_density(e, s, s, delta))
                {
                    BiDensityWitness w;
                    for (auto i : xc)
                        w.x.push_back(static_cast<Vertex>(i));
                    for (auto i : yc)
                        w.y.push_back(rest[i]);
                    w.density = Rational(static_cast<std::int64_t>(e), static_cast<std::int64_t>(s * s));
                    w.sigma = sigma;
                    w.delta = delta;
                    result.status = BiDensityStatus::Witness;
                    result.witness = std::move(w);
                    return result;
                }
            } while (next_combination(yc, rest.size()));
        } while (next_combination(xc, n));
        return result;
    }

    auto find_sparse_pair_heuristic(const Graph & host, double sigma, double delta, std::uint64_t tries,
                                    std::uint64_t seed) -> std::optional<BiDensityWitness>
    {
        auto n = host.order();
        auto s = min_part_size(sigma, n);
        if (2 * s > n)
            return std::nullopt;
        Rng rng(seed);
        std::vector<Vertex> perm(n);
        std::vector<std::size_t> to_x(n), to_y(n);

        for (std::uint64_t attempt = 0; attempt < tries; ++attempt)
        {
            std::iota(perm.begin(), perm.end(), 0);
            for (std::size_t i = 0; i < 2 * s; ++i)
                std::swap(perm[i], perm[i + rng.below(n - i)]);
            Bitset xs = Bitset::from(n, std::span<const Vertex>(perm.data(), s));
            Bitset ys = Bitset::from(n, std::span<const Vertex>(perm.data() + s, s));

            auto density_below = [&] { return below_density(edges_between(host, xs, ys), s, s, delta); };

            // swap the member of `side` with most edges to `other` for the
            // outside vertex with fewest, while that strictly helps
            auto improve = [&](Bitset & side, const Bitset & other) {
                std::size_t worst_in = n, worst_deg = 0, best_out = n, best_deg = n + 1;
                for (Vertex v = 0; v < n; ++v)
                {
                    auto d = host.neighbours(v).intersect_count(other);
                    if (side.test(v))
                    {
                        if (worst_in == n || d > worst_deg)
                        {
                            worst_in = v;
                            worst_deg = d;
                        }
                    }
                    else if (! other.test(v) && d < best_deg)
                    {
                        best_out = v;
                        best_deg = d;
                    }
                }
                if (best_out == n || best_deg >= worst_deg)
                    return false;
                side.reset(worst_in);
                side.set(best_out);
                return true;
            };

            bool found = density_below();
            for (std::size_t iter = 0; ! found && iter < 4 * n; ++iter)
            {
                bool moved = improve(xs, ys);
                moved = improve(ys, xs) || moved;
                found = density_below();
                if (! moved)
                    break;
            }
            if (found)
            {
                BiDensityWitness w;
                w.x = xs.to_vector();
                w.y = ys.to_vector();
                w.density = Rational(static_cast<std::int64_t>(edges_between(host, xs, ys)), static_cast<std::int64_t>(s * s));
                w.sigma = sigma;
                w.delta = delta;
                return w;
            }
        }
        return std::nullopt;
    }
}
