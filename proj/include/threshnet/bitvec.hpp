#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace threshnet {

// Packed bit vector over node ids 0..n-1. Trailing bits of the last word
// are kept zero so equality and hashing work on the raw words.
struct BitVec {
    int n = 0;
    std::vector<uint64_t> words;

    BitVec() = default;
    explicit BitVec(int n_) : n(n_), words((n_ + 63) / 64, 0) {}

    int size() const { return n; }

    bool get(int i) const { return (words[i >> 6] >> (i & 63)) & 1; }

    void set(int i, bool v) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v)
            words[i >> 6] |= mask;
        else
            words[i >> 6] &= ~mask;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words)
            if (w) return true;
        return false;
    }

    BitVec& operator|=(const BitVec& o) {
        for (size_t i = 0; i < words.size(); ++i) words[i] |= o.words[i];
        return *this;
    }

    BitVec& operator&=(const BitVec& o) {
        for (size_t i = 0; i < words.size(); ++i) words[i] &= o.words[i];
        return *this;
    }

    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

    bool is_subset_of(const BitVec& o) const {
        for (size_t i = 0; i < words.size(); ++i)
            if (words[i] & ~o.words[i]) return false;
        return true;
    }

    int diff_count(const BitVec& o) const {
        int c = 0;
        for (size_t i = 0; i < words.size(); ++i) c += std::popcount(words[i] ^ o.words[i]);
        return c;
    }

    bool operator==(const BitVec& o) const { return n == o.n && words == o.words; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }

    // node id 0 is the leftmost character
    std::string to_string() const {
        std::string s(n, '0');
        for (int i = 0; i < n; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    static BitVec from_string(const std::string& s) {
        BitVec v(static_cast<int>(s.size()));
        for (size_t i = 0; i < s.size(); ++i)
            if (s[i] == '1') v.set(static_cast<int>(i), true);
        return v;
    }
};

struct BitVecHash {
    size_t operator()(const BitVec& v) const {
        uint64_t h = 0xcbf29ce484222325ULL;
        for (uint64_t w : v.words) {
            h ^= w;
            h *= 0x100000001b3ULL;
            h ^= h >> 29;
        }
        return static_cast<size_t>(h);
    }
};

}  // namespace threshnet
