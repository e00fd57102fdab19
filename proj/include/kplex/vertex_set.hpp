#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace kplex {

/// Fixed-universe bitset over vertex ids 0..size()-1 of one working graph.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : size_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.set(i);
        return s;
    }

    template <class Range>
    static VertexSet of(std::size_t universe, const Range& ids) {
        VertexSet s(universe);
        for (auto v : ids) s.set(static_cast<std::size_t>(v));
        return s;
    }

    std::size_t universe() const noexcept { return size_; }

    bool test(std::size_t i) const {
        assert(i < size_);
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
    }
    void set(std::size_t i) {
        assert(i < size_);
        words_[i / kWordBits] |= Word{1} << (i % kWordBits);
    }
    void reset(std::size_t i) {
        assert(i < size_);
        words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
    }
    void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

    int count() const noexcept {
        int c = 0;
        for (Word w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
    }

    /// |*this ∩ other| without materializing the intersection.
    int intersect_count(const VertexSet& other) const noexcept {
        assert(other.words_.size() == words_.size());
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }
    /// |*this \ other|
    int difference_count(const VertexSet& other) const noexcept {
        assert(other.words_.size() == words_.size());
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & ~other.words_[i]);
        return c;
    }
    bool is_subset_of(const VertexSet& other) const noexcept {
        assert(other.words_.size() == words_.size());
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    VertexSet& operator&=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Calls f(v) for every member in ascending order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            Word w = words_[wi];
            while (w) {
                const int bit = std::countr_zero(w);
                f(static_cast<int>(wi * kWordBits + static_cast<std::size_t>(bit)));
                w &= w - 1;
            }
        }
    }

    /// Smallest member, or -1.
    int first() const noexcept {
        for (std::size_t wi = 0; wi < words_.size(); ++wi)
            if (words_[wi]) return static_cast<int>(wi * kWordBits) + std::countr_zero(words_[wi]);
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::span<const Word> words() const noexcept { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

}  // namespace kplex
