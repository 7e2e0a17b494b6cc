#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace rdense
{
    using Vertex = std::uint32_t;

    /// Fixed-size packed bit row. Used for adjacency rows and vertex sets, so
    /// neighbourhood intersections cost O(n / 64).
    class Bitset
    {
    public:
        Bitset() = default;
        explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

        static auto full(std::size_t size) -> Bitset
        {
            Bitset b(size);
            for (std::size_t i = 0; i < size; ++i)
                b.set(i);
            return b;
        }

        template <typename Range>
        static auto from(std::size_t size, const Range & items) -> Bitset
        {
            Bitset b(size);
            for (auto v : items)
                b.set(static_cast<std::size_t>(v));
            return b;
        }

        auto size() const -> std::size_t { return size_; }

        auto test(std::size_t i) const -> bool { return (words_[i >> 6] >> (i & 63)) & 1u; }
        void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
        void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

        auto count() const -> std::size_t
        {
            std::size_t c = 0;
            for (auto w : words_)
                c += static_cast<std::size_t>(std::popcount(w));
            return c;
        }

        auto none() const -> bool
        {
            for (auto w : words_)
                if (w)
                    return false;
            return true;
        }

        /// |this ∩ other| without materialising the intersection.
        auto intersect_count(const Bitset & other) const -> std::size_t
        {
            std::size_t c = 0;
            for (std::size_t i = 0; i < words_.size(); ++i)
                c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
            return c;
        }

        auto intersects(const Bitset & other) const -> bool
        {
            for (std::size_t i = 0; i < words_.size(); ++i)
                if (words_[i] & other.words_[i])
                    return true;
            return false;
        }

        auto is_subset_of(const Bitset & other) const -> bool
        {
            for (std::size_t i = 0; i < words_.size(); ++i)
                if (words_[i] & ~other.words_[i])
                    return false;
            return true;
        }

        auto operator&=(const Bitset & other) -> Bitset &
        {
            for (std::size_t i = 0; i < words_.size(); ++i)
                words_[i] &= other.words_[i];
            return *this;
        }

        auto operator|=(const Bitset & other) -> Bitset &
        {
            for (std::size_t i = 0; i < words_.size(); ++i)
                words_[i] |= other.words_[i];
            return *this;
        }

        /// this \ other
        auto subtract(const Bitset & other) -> Bitset &
        {
            for (std::size_t i = 0; i < words_.size(); ++i)
                words_[i] &= ~other.words_[i];
            return *this;
        }

        friend auto operator&(Bitset a, const Bitset & b) -> Bitset { return a &= b; }
        friend auto operator|(Bitset a, const Bitset & b) -> Bitset { return a |= b; }
        friend auto operator==(const Bitset &, const Bitset &) -> bool = default;

        /// First set index >= from, or size() when there is none.
        auto find_next(std::size_t from) const -> std::size_t
        {
            if (from >= size_)
                return size_;
            std::size_t wi = from >> 6;
            std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
            while (true)
            {
                if (w)
                    return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
                if (++wi == words_.size())
                    return size_;
                w = words_[wi];
            }
        }

        auto find_first() const -> std::size_t { return find_next(0); }

        auto to_vector() const -> std::vector<Vertex>
        {
            std::vector<Vertex> out;
            for (auto i = find_first(); i < size_; i = find_next(i + 1))
                out.push_back(static_cast<Vertex>(i));
            return out;
        }

    private:
        std::size_t size_ = 0;
        std::vector<std::uint64_t> words_;
    };
}
