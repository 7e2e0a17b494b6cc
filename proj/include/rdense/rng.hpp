#pragma once

#include <cstdint>
#include <string_view>

namespace rdense
{
    /// Counter-based generator: draw i is the SplitMix64 finaliser applied to
    /// seed + (i + 1) * golden gamma. Output is fully determined by (seed, i),
    /// independent of the standard library, so stored snapshots stay valid.
    class Rng
    {
    public:
        static constexpr std::string_view name = "splitmix64-ctr";
        static constexpr int version = 1;

        explicit Rng(std::uint64_t seed) : seed_(seed) {}

        auto next_u64() -> std::uint64_t
        {
            std::uint64_t z = seed_ + (++counter_) * 0x9e3779b97f4a7c15ull;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            return z ^ (z >> 31);
        }

        /// Uniform in [0, 1) with 53 bits.
        auto uniform() -> double { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

        /// True with probability p; p <= 0 never, p >= 1 always.
        auto bernoulli(double p) -> bool { return uniform() < p; }

        /// Uniform integer in [0, bound), bound > 0. Rejection sampling, unbiased.
        auto below(std::uint64_t bound) -> std::uint64_t
        {
            std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
            std::uint64_t x;
            do
                x = next_u64();
            while (x >= limit);
            return x % bound;
        }

        /// Independent stream derived from this generator's seed and a tag.
        auto fork(std::uint64_t tag) const -> Rng
        {
            Rng r(seed_ ^ (tag * 0xd1342543de82ef95ull + 0x632be59bd9b4e019ull));
            r.next_u64();
            return r;
        }

        auto draws() const -> std::uint64_t { return counter_; }

    private:
        std::uint64_t seed_;
        std::uint64_t counter_ = 0;
    };

    /// 64-bit FNV-1a, for snapshot and input-file hashes.
    inline auto fnv1a64(std::string_view data) -> std::uint64_t
    {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (unsigned char c : data)
        {
            h ^= c;
            h *= 0x100000001b3ull;
        }
        return h;
    }
}
