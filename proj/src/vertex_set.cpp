#include "sepdepth/vertex_set.hpp"

#include <bit>

namespace sepdepth {

std::int32_t VertexSet::first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return static_cast<std::int32_t>(i * 64 + std::countr_zero(words_[i]));
    return -1;
}

std::int32_t VertexSet::next_after(std::uint32_t v) const {
    std::size_t w = (v + 1) >> 6;
    if (w >= words_.size()) return -1;
    std::uint64_t cur = words_[w] & (~0ULL << ((v + 1) & 63));
    while (true) {
        if (cur) return static_cast<std::int32_t>(w * 64 + std::countr_zero(cur));
        if (++w >= words_.size()) return -1;
        cur = words_[w];
    }
}

std::vector<std::uint32_t> VertexSet::members() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for (std::uint32_t v : *this) out.push_back(v);
    return out;
}

std::uint64_t VertexSet::hash() const {
    // splitmix-style fold; universes differ rarely but participate anyway.
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
    for (std::uint64_t w : words_) {
        std::uint64_t z = w + 0x9e3779b97f4a7c15ULL + h;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        h = z ^ (z >> 31);
    }
    return h;
}

bool VertexSet::lex_less(const VertexSet& a, const VertexSet& b) {
    assert(a.universe_ == b.universe_);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        std::uint64_t diff = a.words_[i] ^ b.words_[i];
        if (!diff) continue;
        // x = smallest member present in exactly one of the sets. All members
        // below x are shared, so the comparison is decided at x's position:
        // the set holding x is smaller iff the other set still has a member
        // beyond x (otherwise the other set is a strict prefix).
        int bit = std::countr_zero(diff);
        bool x_in_a = (a.words_[i] >> bit) & 1ULL;
        const VertexSet& other = x_in_a ? b : a;
        std::uint64_t above = other.words_[i] & ~((diff & -diff) | ((diff & -diff) - 1));
        bool other_has_beyond = above != 0;
        for (std::size_t j = i + 1; !other_has_beyond && j < other.words_.size(); ++j)
            other_has_beyond = other.words_[j] != 0;
        return x_in_a ? other_has_beyond : !other_has_beyond;
    }
    return false; // equal
}

bool VertexSet::size_lex_less(const VertexSet& a, const VertexSet& b) {
    std::uint32_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return lex_less(a, b);
}

} // namespace sepdepth
