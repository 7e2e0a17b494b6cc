#pragma once

#include "rdense/graph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rdense::random_lab
{
    /// G(t, rho): each pair independently an edge with probability rho, one
    /// draw per pair in lexicographic order.
    auto sample_gnp(std::size_t t, double rho, std::uint64_t seed) -> Graph;

    /// Each pair of K_n independently Red with probability p_red.
    auto sample_coloring(std::size_t n, double p_red, std::uint64_t seed) -> Coloring;

    /// Upper-tail bound P[X >= (1+θ)pn] <= exp(-θ² p n / 4) for X ~ Bin(n, p),
    /// valid for θ in [0, 1]. Natural exponential.
    auto chernoff_tail(std::uint64_t n, double p, double theta) -> double;

    /// `samples` draws of Bin(n, p) as sums of Bernoulli trials.
    auto binomial_samples(std::uint64_t n, double p, std::uint64_t samples, std::uint64_t seed)
        -> std::vector<std::uint32_t>;

    struct TailEstimate
    {
        double threshold = 0.0;
        std::uint64_t hits = 0;
        std::uint64_t samples = 0;
        double frequency = 0.0;
        double bound = 0.0;
        /// frequency <= bound + 3 binomial standard errors of the bound
        bool dominated = false;
    };

    auto empirical_tail(std::span<const std::uint32_t> draws, std::uint64_t n, double p, double theta) -> TailEstimate;

    struct PartitionCertificate
    {
        std::vector<Vertex> part1;
        std::vector<Vertex> part2;
        double size_dev = 0.0;
        std::size_t max_cross_deg = 0;
        double size_bound = 0.0;
        double degree_bound = 0.0;
        std::uint64_t tries_used = 0;
        bool accepted = false;
        bool t_ge_16 = false;
        /// Δ/t >= 64·log2(t)/t
        bool delta_condition = false;
    };

    /// Measures a given bisection against the balanced-partition inequalities:
    /// max_i ||V_i| - t/2| <= 2√t and every vertex has at most
    /// Δ/2 + 2√(Δ·log2 t) neighbours in each part.
    auto evaluate_partition(const Graph & h, std::span<const Vertex> part1) -> PartitionCertificate;

    /// Las Vegas bisection: random halves until both inequalities hold. On
    /// failure returns the attempt with the smallest degree excess, with
    /// accepted = false.
    auto judicious_partition(const Graph & h, std::uint64_t max_tries, std::uint64_t seed) -> PartitionCertificate;

    enum class SpreadMode
    {
        Exhaustive,
        Sampled
    };

    struct SpreadReport
    {
        double delta = 0.0;
        double eps = 0.0;
        double rho = 0.0;
        std::size_t set_size = 0;
        /// a vertex counts when it has more than this many neighbours in V
        double degree_threshold = 0.0;
        std::size_t worst_count = 0;
        /// 12·ln(e/δ) / (ρ ε²)
        double threshold = 0.0;
        std::uint64_t sets_inspected = 0;
        SpreadMode mode = SpreadMode::Sampled;
        bool vacuous = false;
        bool exceeds = false;
        bool refused = false;
    };

    /// For vertex sets V of size ⌈δt⌉, counts vertices with more than
    /// (1+ε)ρ|V| neighbours in V and reports the maximum over inspected sets.
    /// Exhaustive mode is refused when C(t, ⌈δt⌉) exceeds `budget`; sampled
    /// mode inspects `budget` uniform sets.
    auto verify_degree_spread(const Graph & h, double delta, double eps, double rho, SpreadMode mode,
                              std::uint64_t budget, std::uint64_t seed) -> SpreadReport;

    struct DegreeTailReport
    {
        std::size_t max_degree = 0;
        double bound = 0.0;
        double margin = 0.0;
        bool pass = false;
    };

    /// Δ(H) <= ρt + 4√(ρt·log2 t).
    auto max_degree_tail_check(const Graph & h, double rho) -> DegreeTailReport;

    /// log2 C(n, k), or +inf when k > n.
    auto log2_binomial(std::uint64_t n, std::uint64_t k) -> double;
}
