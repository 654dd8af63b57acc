#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace all2sat {

// Runtime-sized bitset over a fixed universe. std::bitset is compile-time
// sized, so the poset/row machinery carries its own.
class bitvec {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bitvec() = default;
    explicit bitvec(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] |= std::uint64_t(1) << (i & 63);
    }
    void reset(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
    bool test(std::size_t i) const {
        assert(i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bitvec& operator|=(const bitvec& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    bitvec& operator&=(const bitvec& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    // *this \ o
    bitvec& operator-=(const bitvec& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend bitvec operator|(bitvec a, const bitvec& b) { return a |= b; }
    friend bitvec operator&(bitvec a, const bitvec& b) { return a &= b; }
    friend bitvec operator-(bitvec a, const bitvec& b) { return a -= b; }

    bitvec operator~() const {
        bitvec r(nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
        r.clear_padding();
        return r;
    }

    bool intersects(const bitvec& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }
    bool is_subset_of(const bitvec& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    std::size_t find_first() const { return find_from(0); }
    std::size_t find_next(std::size_t i) const { return find_from(i + 1); }

    friend bool operator==(const bitvec& a, const bitvec& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for (std::size_t i = find_first(); i != npos; i = find_next(i))
            out.push_back(static_cast<int>(i));
        return out;
    }

private:
    void clear_padding() {
        if (nbits_ & 63) words_.back() &= (std::uint64_t(1) << (nbits_ & 63)) - 1;
    }
    std::size_t find_from(std::size_t i) const {
        if (i >= nbits_) return npos;
        std::size_t k = i >> 6;
        std::uint64_t w = words_[k] & (~std::uint64_t(0) << (i & 63));
        while (true) {
            if (w) return (k << 6) + std::countr_zero(w);
            if (++k == words_.size()) return npos;
            w = words_[k];
        }
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace all2sat
