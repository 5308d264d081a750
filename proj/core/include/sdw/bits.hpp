#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sdw/errors.hpp"

namespace sdw {

// Fixed-length bit vector over GF(2). Bit i lives in word i/64 at position
// i%64; unused high bits of the last word stay zero.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVec from_string(std::string_view s) {
        BitVec v(static_cast<int>(s.size()));
        for (int i = 0; i < v.n_; i++) {
            char c = s[static_cast<size_t>(i)];
            if (c == '1') {
                v.set(i, true);
            } else if (c != '0') {
                throw DomainError("bit vector strings may only contain 0 and 1");
            }
        }
        return v;
    }

    int size() const { return n_; }

    bool get(int i) const { return (w_[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1u; }

    void set(int i, bool b) {
        std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (b) {
            w_[static_cast<size_t>(i >> 6)] |= m;
        } else {
            w_[static_cast<size_t>(i >> 6)] &= ~m;
        }
    }

    void flip(int i) { w_[static_cast<size_t>(i >> 6)] ^= std::uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& o) {
        for (size_t i = 0; i < w_.size(); i++) w_[i] ^= o.w_[i];
        return *this;
    }

    int weight() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }

    // parity of the coordinatewise AND, i.e. the GF(2) inner product
    bool dot(const BitVec& o) const {
        int c = 0;
        for (size_t i = 0; i < w_.size(); i++) c += std::popcount(w_[i] & o.w_[i]);
        return c & 1;
    }

    int first_set() const {
        for (size_t i = 0; i < w_.size(); i++)
            if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }

    std::vector<int> support() const {
        std::vector<int> s;
        s.reserve(static_cast<size_t>(weight()));
        for (size_t i = 0; i < w_.size(); i++) {
            std::uint64_t w = w_[i];
            while (w) {
                s.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return s;
    }

    std::uint64_t mask64() const {
        if (n_ > 64) throw DomainError("bit vector does not fit in one word");
        return w_.empty() ? 0 : w_[0];
    }

    std::string to_string() const {
        std::string s(static_cast<size_t>(n_), '0');
        for (int i = 0; i < n_; i++)
            if (get(i)) s[static_cast<size_t>(i)] = '1';
        return s;
    }

    friend bool operator==(const BitVec&, const BitVec&) = default;

    const std::vector<std::uint64_t>& words() const { return w_; }

  private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Orders vectors of equal length by their supports as ascending point tuples:
// at the first coordinate where they differ, the vector containing it wins.
inline bool support_less(const BitVec& a, const BitVec& b) {
    const auto& aw = a.words();
    const auto& bw = b.words();
    for (size_t i = 0; i < aw.size(); i++) {
        std::uint64_t d = aw[i] ^ bw[i];
        if (d) return (aw[i] >> std::countr_zero(d)) & 1u;
    }
    return false;
}

}  // namespace sdw
