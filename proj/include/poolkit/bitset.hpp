#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace poolkit {

/// Fixed-width bit vector over positions {0,...,nbits-1}.
/// All set algebra (union, difference, symmetric difference, popcount)
/// is word-parallel; this is the hot loop of every verifier.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {
        assert(nbits >= 0);
    }

    static Bitset of(int nbits, std::initializer_list<int> idx) {
        Bitset b(nbits);
        for (int i : idx) b.set(i);
        return b;
    }
    static Bitset of(int nbits, const std::vector<int>& idx) {
        Bitset b(nbits);
        for (int i : idx) b.set(i);
        return b;
    }

    int capacity() const { return nbits_; }

    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] |= uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool none() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    /// *this \ o
    Bitset minus(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        Bitset r(nbits_);
        for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & ~o.words_[k];
        return r;
    }
    /// |*this \ o| without materializing the difference.
    int minus_count(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        int c = 0;
        for (size_t k = 0; k < words_.size(); ++k) c += std::popcount(words_[k] & ~o.words_[k]);
        return c;
    }
    /// |*this Δ o|
    int sym_diff_count(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        int c = 0;
        for (size_t k = 0; k < words_.size(); ++k) c += std::popcount(words_[k] ^ o.words_[k]);
        return c;
    }
    int intersect_count(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        int c = 0;
        for (size_t k = 0; k < words_.size(); ++k) c += std::popcount(words_[k] & o.words_[k]);
        return c;
    }
    /// o ⊆ *this
    bool contains(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (size_t k = 0; k < words_.size(); ++k)
            if (o.words_[k] & ~words_[k]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    /// Order of the sorted index sequences: {1,2} < {1,2,3} < {1,3} < {2}.
    /// This is the enumeration order used throughout verification and search.
    bool lex_less(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        int j = -1;
        for (size_t k = 0; k < words_.size(); ++k) {
            uint64_t d = words_[k] ^ o.words_[k];
            if (d) {
                j = int(k) * 64 + std::countr_zero(d);
                break;
            }
        }
        if (j < 0) return false;  // equal
        // All positions below j coincide; whoever holds j has the smaller
        // element there, unless the other side's sequence already ended.
        if (test(j)) return o.has_bit_above(j);
        return !has_bit_above(j);
    }

    bool has_bit_above(int j) const {
        int k = j >> 6;
        uint64_t w = words_[k] & ~((uint64_t{2} << (j & 63)) - 1);
        if (w) return true;
        for (size_t m = k + 1; m < words_.size(); ++m)
            if (words_[m]) return true;
        return false;
    }

    /// Ascending 0-based positions of set bits.
    std::vector<int> indices() const {
        std::vector<int> out;
        for (size_t k = 0; k < words_.size(); ++k) {
            uint64_t w = words_[k];
            while (w) {
                out.push_back(int(k) * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

    /// Raw word order; any total order, used for dedupe only.
    bool word_less(const Bitset& o) const { return words_ < o.words_; }

private:
    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace poolkit
