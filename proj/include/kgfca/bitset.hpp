#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace kgfca {

// Fixed-width dynamic bitset; the workhorse behind extents, intents and
// attribute sets. All binary operations require equal widths.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : words_((bits + 63) / 64, 0), bits_(bits) {}

    static Bitset full(std::size_t bits) {
        Bitset b(bits);
        for (auto& w : b.words_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    std::size_t size() const { return bits_; }

    bool test(std::size_t i) const {
        assert(i < bits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void set(std::size_t i) {
        assert(i < bits_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::size_t i) {
        assert(i < bits_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool subset_of(const Bitset& other) const {
        assert(bits_ == other.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& other) const {
        assert(bits_ == other.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& other) {
        assert(bits_ == other.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& other) {
        assert(bits_ == other.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    // this \ other
    Bitset& subtract(const Bitset& other) {
        assert(bits_ == other.bits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    friend Bitset difference(Bitset a, const Bitset& b) { return a.subtract(b); }

    bool operator==(const Bitset& other) const = default;
    // Arbitrary total order (word-wise); used for map keys, not for lectic
    // comparisons.
    auto operator<=>(const Bitset& other) const = default;

    // Lowest set bit at index >= from, or size() if none.
    std::size_t find_next(std::size_t from = 0) const {
        if (from >= bits_) return bits_;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return bits_;
            w = words_[wi];
        }
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                std::size_t bit = static_cast<std::size_t>(std::countr_zero(w));
                fn((wi << 6) + bit);
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> to_indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    // Copy with all bits at positions >= limit cleared.
    Bitset prefix(std::size_t limit) const {
        Bitset out = *this;
        std::size_t wi = limit >> 6;
        for (std::size_t i = wi + 1; i < out.words_.size(); ++i) out.words_[i] = 0;
        if (wi < out.words_.size())
            out.words_[wi] &= (limit & 63) ? ((std::uint64_t{1} << (limit & 63)) - 1) : 0;
        return out;
    }

    // True when every set bit below `limit` is also set in `other`.
    bool prefix_subset_of(const Bitset& other, std::size_t limit) const {
        assert(bits_ == other.bits_);
        std::size_t wi = limit >> 6;
        for (std::size_t i = 0; i < wi; ++i)
            if (words_[i] & ~other.words_[i]) return false;
        if (wi < words_.size() && (limit & 63)) {
            std::uint64_t mask = (std::uint64_t{1} << (limit & 63)) - 1;
            if (words_[wi] & mask & ~other.words_[wi]) return false;
        }
        return true;
    }

    static Bitset of(std::size_t bits, std::initializer_list<std::size_t> indices) {
        Bitset b(bits);
        for (auto i : indices) b.set(i);
        return b;
    }

    // Lectic order on equal-width sets: A precedes B when the smallest
    // attribute where they differ belongs to B.
    friend bool lectic_less(const Bitset& a, const Bitset& b) {
        assert(a.size() == b.size());
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            std::uint64_t diff = a.words_[i] ^ b.words_[i];
            if (diff) {
                std::uint64_t lowest = diff & (~diff + 1);
                return (b.words_[i] & lowest) != 0;
            }
        }
        return false;
    }

private:
    void trim() {
        if (bits_ & 63) words_.back() &= (~std::uint64_t{0}) >> (64 - (bits_ & 63));
    }

    std::vector<std::uint64_t> words_;
    std::size_t bits_ = 0;
};

} // namespace kgfca
