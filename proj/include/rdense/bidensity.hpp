#pragma once

#include "rdense/graph.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

namespace rdense
{
    /// A disjoint pair (X, Y), both of size at least σ|V|, whose edge density
    /// is below δ.
    struct BiDensityWitness
    {
        std::vector<Vertex> x;
        std::vector<Vertex> y;
        Rational density;
        double sigma = 0.0;
        double delta = 0.0;
    };

    enum class BiDensityStatus
    {
        Certified,
        Witness,
        TooLarge
    };

    struct BiDensityResult
    {
        BiDensityStatus status = BiDensityStatus::Certified;
        std::optional<BiDensityWitness> witness;
        std::uint64_t pairs_checked = 0;
        std::size_t part_size = 0;
    };

    /// Smallest integer size s with s >= σ n, and at least 1. A relative slack
    /// of 1e-12 absorbs rounding in products such as (1/3) * 12.
    inline auto min_part_size(double sigma, std::size_t n) -> std::size_t
    {
        auto raw = sigma * static_cast<double>(n);
        auto s = static_cast<std::size_t>(std::ceil(raw - 1e-12 * std::max(1.0, raw)));
        return s == 0 ? 1 : s;
    }

    /// e / (a b) < δ, decided in one place so every checker agrees on ties.
    inline auto below_density(std::size_t edges, std::size_t a, std::size_t b, double delta) -> bool
    {
        return static_cast<double>(edges) < delta * static_cast<double>(a) * static_cast<double>(b);
    }
}
