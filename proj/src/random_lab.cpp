#include "rdense/random_lab.hpp"
#include "rdense/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rdense::random_lab
{
    namespace
    {
        void check_probability(double p, const char * what)
        {
            if (! (p >= 0.0 && p <= 1.0))
                throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
        }

        auto sample_rows(std::size_t n, double p, std::uint64_t seed) -> std::vector<Bitset>
        {
            Rng rng(seed);
            std::vector<Bitset> rows(n, Bitset(n));
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = u + 1; v < n; ++v)
                    if (rng.bernoulli(p))
                    {
                        rows[u].set(v);
                        rows[v].set(u);
                    }
            return rows;
        }
    }

    auto sample_gnp(std::size_t t, double rho, std::uint64_t seed) -> Graph
    {
        check_probability(rho, "rho");
        return Graph::from_rows(sample_rows(t, rho, seed));
    }

    auto sample_coloring(std::size_t n, double p_red, std::uint64_t seed) -> Coloring
    {
        check_probability(p_red, "p_red");
        return Coloring(Graph::from_rows(sample_rows(n, p_red, seed)));
    }

    auto chernoff_tail(std::uint64_t n, double p, double theta) -> double
    {
        if (n < 1)
            throw std::invalid_argument("chernoff_tail needs n >= 1");
        if (! (p > 0.0 && p < 1.0))
            throw std::invalid_argument("chernoff_tail needs p in (0, 1)");
        if (! (theta >= 0.0 && theta <= 1.0))
            throw std::invalid_argument("chernoff_tail is only established for theta in [0, 1]");
        return std::exp(-theta * theta * p * static_cast<double>(n) / 4.0);
    }

    auto binomial_samples(std::uint64_t n, double p, std::uint64_t samples, std::uint64_t seed)
        -> std::vector<std::uint32_t>
    {
        check_probability(p, "p");
        Rng rng(seed);
        std::vector<std::uint32_t> out(samples);
        // p = 1/2: one random bit per trial
        bool fair = p == 0.5;
        for (auto & x : out)
        {
            std::uint32_t hits = 0;
            if (fair)
            {
                std::uint64_t left = n;
                while (left >= 64)
                {
                    hits += static_cast<std::uint32_t>(std::popcount(rng.next_u64()));
                    left -= 64;
                }
                if (left)
                    hits += static_cast<std::uint32_t>(std::popcount(rng.next_u64() & ((std::uint64_t{1} << left) - 1)));
            }
            else
                for (std::uint64_t i = 0; i < n; ++i)
                    hits += rng.bernoulli(p) ? 1 : 0;
            x = hits;
        }
        return out;
    }

    auto empirical_tail(std::span<const std::uint32_t> draws, std::uint64_t n, double p, double theta) -> TailEstimate
    {
        TailEstimate e;
        e.threshold = (1.0 + theta) * p * static_cast<double>(n);
        e.samples = draws.size();
        for (auto x : draws)
            if (static_cast<double>(x) >= e.threshold)
                ++e.hits;
        e.frequency = e.samples ? static_cast<double>(e.hits) / static_cast<double>(e.samples) : 0.0;
        e.bound = chernoff_tail(n, p, theta);
        auto stderr_bound = std::sqrt(e.bound * (1.0 - e.bound) / static_cast<double>(std::max<std::uint64_t>(e.samples, 1)));
        e.dominated = e.frequency <= e.bound + 3.0 * stderr_bound;
        return e;
    }

    auto evaluate_partition(const Graph & h, std::span<const Vertex> part1) -> PartitionCertificate
    {
        auto t = h.order();
        PartitionCertificate c;
        Bitset in1(t);
        for (auto v : part1)
        {
            if (v >= t || in1.test(v))
                throw std::invalid_argument("partition part lists an invalid or repeated vertex");
            in1.set(v);
        }
        Bitset in2 = Bitset::full(t);
        in2.subtract(in1);
        c.part1 = in1.to_vector();
        c.part2 = in2.to_vector();

        auto half = static_cast<double>(t) / 2.0;
        c.size_dev = std::max(std::abs(static_cast<double>(c.part1.size()) - half),
                              std::abs(static_cast<double>(c.part2.size()) - half));
        for (Vertex v = 0; v < t; ++v)
            c.max_cross_deg = std::max({c.max_cross_deg, h.neighbours(v).intersect_count(in1),
                                        h.neighbours(v).intersect_count(in2)});

        auto delta_t = static_cast<double>(h.max_degree());
        auto log_t = t > 1 ? std::log2(static_cast<double>(t)) : 0.0;
        c.size_bound = 2.0 * std::sqrt(static_cast<double>(t));
        c.degree_bound = delta_t / 2.0 + 2.0 * std::sqrt(delta_t * log_t);
        c.accepted = c.size_dev <= c.size_bound && static_cast<double>(c.max_cross_deg) <= c.degree_bound;
        c.t_ge_16 = t >= 16;
        c.delta_condition = t > 0 && delta_t >= 64.0 * log_t;
        return c;
    }

    auto judicious_partition(const Graph & h, std::uint64_t max_tries, std::uint64_t seed) -> PartitionCertificate
    {
        Rng rng(seed);
        PartitionCertificate best;
        double best_score = std::numeric_limits<double>::infinity();
        for (std::uint64_t attempt = 1; attempt <= max_tries; ++attempt)
        {
            std::vector<Vertex> part1;
            for (Vertex v = 0; v < h.order(); ++v)
                if (rng.bernoulli(0.5))
                    part1.push_back(v);
            auto c = evaluate_partition(h, part1);
            c.tries_used = attempt;
            if (c.accepted)
                return c;
            auto score = std::max(0.0, c.size_dev - c.size_bound) / std::max(1.0, c.size_bound) +
                         std::max(0.0, static_cast<double>(c.max_cross_deg) - c.degree_bound) / std::max(1.0, c.degree_bound);
            if (score < best_score)
            {
                best_score = score;
                best = std::move(c);
            }
        }
        best.tries_used = max_tries;
        return best;
    }

    auto log2_binomial(std::uint64_t n, std::uint64_t k) -> double
    {
        if (k > n)
            return std::numeric_limits<double>::infinity();
        k = std::min(k, n - k);
        double acc = 0.0;
        for (std::uint64_t i = 1; i <= k; ++i)
            acc += std::log2(static_cast<double>(n - k + i)) - std::log2(static_cast<double>(i));
        return acc;
    }

    auto verify_degree_spread(const Graph & h, double delta, double eps, double rho, SpreadMode mode,
                              std::uint64_t budget, std::uint64_t seed) -> SpreadReport
    {
        if (! (delta > 0.0 && delta <= 1.0) || ! (eps > 0.0 && eps <= 1.0))
            throw std::invalid_argument("delta and eps must lie in (0, 1]");
        if (! (rho > 0.0 && rho <= 1.0))
            throw std::invalid_argument("rho must lie in (0, 1]");
        auto t = h.order();
        SpreadReport r;
        r.delta = delta;
        r.eps = eps;
        r.rho = rho;
        r.mode = mode;
        auto raw = delta * static_cast<double>(t);
        r.set_size = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(raw - 1e-12 * std::max(1.0, raw))));
        r.degree_threshold = (1.0 + eps) * rho * static_cast<double>(r.set_size);
        r.threshold = 12.0 * std::log(std::exp(1.0) / delta) / (rho * eps * eps);
        r.vacuous = r.threshold >= static_cast<double>(t);
        if (r.set_size > t)
        {
            r.refused = true;
            return r;
        }

        auto inspect = [&](const Bitset & set) {
            std::size_t count = 0;
            for (Vertex u = 0; u < t; ++u)
                if (static_cast<double>(h.neighbours(u).intersect_count(set)) > r.degree_threshold)
                    ++count;
            r.worst_count = std::max(r.worst_count, count);
            ++r.sets_inspected;
        };

        if (mode == SpreadMode::Exhaustive)
        {
            if (log2_binomial(t, r.set_size) > std::log2(static_cast<double>(std::max<std::uint64_t>(budget, 1))) + 1e-9)
            {
                r.refused = true;
                return r;
            }
            std::vector<Vertex> comb(r.set_size);
            std::iota(comb.begin(), comb.end(), 0);
            auto k = r.set_size;
            while (true)
            {
                inspect(Bitset::from(t, comb));
                std::size_t i = k;
                while (i > 0 && comb[i - 1] == t - k + i - 1)
                    --i;
                if (i == 0)
                    break;
                ++comb[i - 1];
                for (auto j = i; j < k; ++j)
                    comb[j] = comb[j - 1] + 1;
            }
        }
        else
        {
            Rng rng(seed);
            std::vector<Vertex> pool(t);
            for (std::uint64_t s = 0; s < budget; ++s)
            {
                std::iota(pool.begin(), pool.end(), 0);
                for (std::size_t i = 0; i < r.set_size; ++i)
                    std::swap(pool[i], pool[i + rng.below(t - i)]);
                inspect(Bitset::from(t, std::span<const Vertex>(pool.data(), r.set_size)));
            }
        }
        r.exceeds = static_cast<double>(r.worst_count) > r.threshold;
        return r;
    }

    auto max_degree_tail_check(const Graph & h, double rho) -> DegreeTailReport
    {
        check_probability(rho, "rho");
        DegreeTailReport r;
        auto t = static_cast<double>(h.order());
        auto rt = rho * t;
        r.max_degree = h.max_degree();
        r.bound = rt + 4.0 * std::sqrt(rt * (t > 1 ? std::log2(t) : 0.0));
        r.margin = r.bound - static_cast<double>(r.max_degree);
        r.pass = r.margin >= 0.0;
        return r;
    }
}
