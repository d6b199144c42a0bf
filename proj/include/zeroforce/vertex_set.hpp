#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

// Capacity grows in 64-bit word increments.
#ifndef ZF_SET_WORDS
#define ZF_SET_WORDS 1
#endif

namespace zf {

/// Fixed-capacity set of vertex indices backed by machine words.
class VertexSet {
public:
    static constexpr int kWords = ZF_SET_WORDS;
    static constexpr int kMaxVertices = 64 * kWords;

    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) set(v);
    }

    static VertexSet full(int n) {
        VertexSet s;
        for (int w = 0; n > 0; ++w, n -= 64) {
            s.words_[w] = n >= 64 ? ~std::uint64_t{0}
                                  : (std::uint64_t{1} << n) - 1;
        }
        return s;
    }

    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Smallest member, or -1 when empty.
    int first() const {
        for (int i = 0; i < kWords; ++i)
            if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
        return -1;
    }
    /// Smallest member greater than v, or -1.
    int next(int v) const {
        ++v;
        if (v >= kMaxVertices) return -1;
        int w = v >> 6;
        std::uint64_t rest = words_[w] >> (v & 63);
        if (rest) return v + std::countr_zero(rest);
        for (int i = w + 1; i < kWords; ++i)
            if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

private:
    std::array<std::uint64_t, kWords> words_{};
};

}  // namespace zf
