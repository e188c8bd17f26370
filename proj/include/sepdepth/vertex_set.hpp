#pragma once

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "sepdepth/kernels/bitops.hpp"

namespace sepdepth {

/// Canonical vertex subset of a fixed universe {0, ..., universe-1}, stored
/// as packed 64-bit words. Two sets over the same universe with the same
/// members compare and hash equal, so VertexSet doubles as the memoization
/// and separator-identity key. Word-level work goes through the runtime
/// selected kernel set.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(std::uint32_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet full(std::uint32_t universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~0ULL;
        s.mask_tail();
        return s;
    }

    static VertexSet of(std::uint32_t universe, std::initializer_list<std::uint32_t> members) {
        VertexSet s(universe);
        for (std::uint32_t v : members) s.set(v);
        return s;
    }

    std::uint32_t universe() const { return universe_; }
    std::size_t word_count() const { return words_.size(); }
    std::span<const std::uint64_t> words() const { return words_; }

    bool test(std::uint32_t v) const {
        assert(v < universe_);
        return (words_[v >> 6] >> (v & 63)) & 1ULL;
    }

    void set(std::uint32_t v) {
        assert(v < universe_);
        words_[v >> 6] |= 1ULL << (v & 63);
    }

    void reset(std::uint32_t v) {
        assert(v < universe_);
        words_[v >> 6] &= ~(1ULL << (v & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    bool empty() const {
        return kernels::active_kernels().is_zero(words_.data(), words_.size());
    }

    std::uint32_t count() const {
        return static_cast<std::uint32_t>(
            kernels::active_kernels().popcount(words_.data(), words_.size()));
    }

    VertexSet& operator&=(const VertexSet& rhs) {
        assert(universe_ == rhs.universe_);
        kernels::active_kernels().bit_and(words_.data(), words_.data(), rhs.words_.data(),
                                          words_.size());
        return *this;
    }

    VertexSet& operator|=(const VertexSet& rhs) {
        assert(universe_ == rhs.universe_);
        kernels::active_kernels().bit_or(words_.data(), words_.data(), rhs.words_.data(),
                                         words_.size());
        return *this;
    }

    /// Set difference: *this = *this \ rhs.
    VertexSet& operator-=(const VertexSet& rhs) {
        assert(universe_ == rhs.universe_);
        kernels::active_kernels().bit_andnot(words_.data(), words_.data(), rhs.words_.data(),
                                             words_.size());
        return *this;
    }

    friend VertexSet operator&(VertexSet lhs, const VertexSet& rhs) { return lhs &= rhs; }
    friend VertexSet operator|(VertexSet lhs, const VertexSet& rhs) { return lhs |= rhs; }
    friend VertexSet operator-(VertexSet lhs, const VertexSet& rhs) { return lhs -= rhs; }

    bool is_subset_of(const VertexSet& rhs) const {
        assert(universe_ == rhs.universe_);
        return kernels::active_kernels().is_subset(words_.data(), rhs.words_.data(),
                                                   words_.size());
    }

    bool intersects(const VertexSet& rhs) const {
        assert(universe_ == rhs.universe_);
        return kernels::active_kernels().intersects(words_.data(), rhs.words_.data(),
                                                    words_.size());
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ &&
               kernels::active_kernels().equals(a.words_.data(), b.words_.data(),
                                                a.words_.size());
    }

    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

    /// Smallest member, or -1 when empty.
    std::int32_t first() const;

    /// Smallest member strictly greater than v, or -1.
    std::int32_t next_after(std::uint32_t v) const;

    std::vector<std::uint32_t> members() const;

    std::uint64_t hash() const;

    /// Lexicographic order on the ascending member sequences.
    static bool lex_less(const VertexSet& a, const VertexSet& b);

    /// (|S|, lexicographic) order; the canonical separator ordering.
    static bool size_lex_less(const VertexSet& a, const VertexSet& b);

    class const_iterator {
    public:
        const_iterator(const VertexSet* s, std::int32_t v) : set_(s), v_(v) {}
        std::uint32_t operator*() const { return static_cast<std::uint32_t>(v_); }
        const_iterator& operator++() {
            v_ = set_->next_after(static_cast<std::uint32_t>(v_));
            return *this;
        }
        bool operator!=(const const_iterator& o) const { return v_ != o.v_; }

    private:
        const VertexSet* set_;
        std::int32_t v_;
    };

    const_iterator begin() const { return {this, first()}; }
    const_iterator end() const { return {this, -1}; }

private:
    void mask_tail() {
        if (universe_ & 63) words_.back() &= (1ULL << (universe_ & 63)) - 1;
    }

    std::uint32_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const {
        return static_cast<std::size_t>(s.hash());
    }
};

} // namespace sepdepth
