#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace canonram {

/// Fixed-width dynamic bitset used for adjacency rows and candidate sets.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return bits_; }

    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const noexcept {
        for (auto w : words_)
            if (w != 0) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }

    /// Popcount of the intersection without materialising it.
    std::size_t count_and(const Bitset& o) const noexcept {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
        return c;
    }

    /// Clears every bit at index <= i.
    void clear_through(std::size_t i) noexcept {
        const std::size_t w = i >> 6;
        for (std::size_t k = 0; k < w && k < words_.size(); ++k) words_[k] = 0;
        if (w < words_.size()) {
            const unsigned b = static_cast<unsigned>(i & 63);
            words_[w] &= (b == 63) ? 0 : (~std::uint64_t{0} << (b + 1));
        }
    }

    /// Calls fn(index) for each set bit in increasing order; stops early if fn returns false.
    template <class Fn>
    bool for_each(Fn&& fn) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w != 0) {
                const std::size_t i = (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
                w &= w - 1;
                if (!fn(i)) return false;
            }
        }
        return true;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace canonram
