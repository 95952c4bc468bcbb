#pragma once

#include "blowup/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <span>
#include <vector>

namespace blowup {

/// Fixed-width dynamic bitset over [0, bits). Set operations route through
/// the kernel dispatch table.
class Bitset {
public:
    using Word = kernels::Word;

    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_(word_count(bits), 0) {}

    static constexpr std::size_t word_count(std::size_t bits) noexcept
    {
        return (bits + kernels::word_bits - 1) / kernels::word_bits;
    }

    std::size_t bits() const noexcept { return bits_; }

    bool test(std::size_t i) const noexcept
    {
        return (words_[i / kernels::word_bits] >> (i % kernels::word_bits)) & 1u;
    }
    void set(std::size_t i) noexcept { words_[i / kernels::word_bits] |= Word{1} << (i % kernels::word_bits); }
    void reset(std::size_t i) noexcept
    {
        words_[i / kernels::word_bits] &= ~(Word{1} << (i % kernels::word_bits));
    }
    void clear() noexcept { std::fill(words_.begin(), words_.end(), Word{0}); }

    std::size_t count() const noexcept { return kernels::popcount(words_); }
    bool any() const noexcept
    {
        for (Word w : words_)
            if (w)
                return true;
        return false;
    }

    std::span<const Word> words() const noexcept { return words_; }
    std::span<Word> words() noexcept { return words_; }

    /// Calls f(i) for every set bit in ascending order.
    template <class F>
    void for_each(F&& f) const
    {
        for_each_bit(words_, f);
    }

    template <class F>
    static void for_each_bit(std::span<const Word> words, F&& f)
    {
        for (std::size_t w = 0; w < words.size(); ++w) {
            Word bits = words[w];
            while (bits) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
                f(w * kernels::word_bits + bit);
                bits &= bits - 1;
            }
        }
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::size_t bits_ = 0;
    std::vector<Word> words_;
};

} // namespace blowup
