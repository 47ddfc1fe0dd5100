#pragma once

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace oct {

// Set of vertex ids over a fixed universe [0, n), stored as a word-packed
// bitset. The canonical representation of the set is its ascending member
// list; equality, hashing and the lexicographic order below all agree with
// that list. Binary operations require both operands to share the universe.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet all(int universe) {
        VertexSet s(universe);
        for (int w = 0; w < static_cast<int>(s.words_.size()); ++w) s.words_[w] = ~0ULL;
        s.trim();
        return s;
    }
    static VertexSet of(int universe, std::initializer_list<int> members) {
        VertexSet s(universe);
        for (int v : members) s.set(v);
        return s;
    }
    static VertexSet of(int universe, const std::vector<int>& members) {
        VertexSet s(universe);
        for (int v : members) s.set(v);
        return s;
    }

    int universe_size() const { return n_; }

    bool test(int v) const {
        assert(v >= 0 && v < n_);
        return (words_[v >> 6] >> (v & 63)) & 1ULL;
    }
    void set(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] |= 1ULL << (v & 63);
    }
    void reset(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] &= ~(1ULL << (v & 63));
    }

    bool empty() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    // First member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(words_[i]));
        return -1;
    }
    // Smallest member strictly greater than v, or -1.
    int next(int v) const {
        ++v;
        if (v >= n_) return -1;
        std::size_t i = static_cast<std::size_t>(v) >> 6;
        std::uint64_t w = words_[i] & (~0ULL << (v & 63));
        while (true) {
            if (w) return static_cast<int>(i * 64 + __builtin_ctzll(w));
            if (++i >= words_.size()) return -1;
            w = words_[i];
        }
    }

    template <typename F>
    void for_each(F&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                fn(static_cast<int>(i * 64 + __builtin_ctzll(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
        s.trim();
        return s;
    }

    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

    // Lexicographic order of the ascending member lists. Everything below
    // the lowest differing member d is shared, so: if d belongs to a, then
    // a < b unless b has no member above d (b is then a proper prefix of a);
    // if d belongs to b, then a < b only when a has no member above d.
    static bool lex_less(const VertexSet& a, const VertexSet& b) {
        assert(a.n_ == b.n_);
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            std::uint64_t diff = a.words_[i] ^ b.words_[i];
            if (!diff) continue;
            std::uint64_t low = diff & (~diff + 1);
            std::uint64_t above = ~((low << 1) - 1);  // 0 when low is the top bit
            if (a.words_[i] & low) return b.has_member_above(i, above);
            return !a.has_member_above(i, above);
        }
        return false;  // equal
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n_);
        for (std::uint64_t w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<std::size_t>(h);
    }

    struct Hash {
        std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
    };

private:
    void trim() {
        int r = n_ & 63;
        if (r && !words_.empty()) words_.back() &= (1ULL << r) - 1;
    }

    bool has_member_above(std::size_t word, std::uint64_t above_mask) const {
        if (words_[word] & above_mask) return true;
        for (std::size_t i = word + 1; i < words_.size(); ++i)
            if (words_[i]) return true;
        return false;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace oct
