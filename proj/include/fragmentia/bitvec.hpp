#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fragmentia {

// Fixed-width bit vector packed 64 bits per machine word.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    static BitVec unit(std::size_t nbits, std::size_t i) {
        BitVec v(nbits);
        v.set(i, true);
        return v;
    }

    std::size_t size() const { return nbits_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }

    void flip(std::size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    BitVec &operator^=(const BitVec &o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec &b) {
        a ^= b;
        return a;
    }

    bool operator==(const BitVec &) const = default;

    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    int popcount() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }

    // Parity of the AND with another vector.
    bool dot(const BitVec &o) const {
        uint64_t acc = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
        return __builtin_popcountll(acc) & 1;
    }

    // Index of the lowest set bit, or size() if none.
    std::size_t lowest_bit() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return i * 64 + __builtin_ctzll(w_[i]);
        return nbits_;
    }

    const std::vector<uint64_t> &words() const { return w_; }

  private:
    std::size_t nbits_ = 0;
    std::vector<uint64_t> w_;
};

// Symplectic inner product for interleaved (x,z) bit pairs: bit 2i is x_i,
// bit 2i+1 is z_i.  Equals sum_i (u_x v_z + u_z v_x) mod 2.
inline bool symplectic_product(const BitVec &u, const BitVec &v) {
    const auto &uw = u.words();
    const auto &vw = v.words();
    constexpr uint64_t even = 0x5555555555555555ull;
    uint64_t acc = 0;
    for (std::size_t i = 0; i < uw.size(); ++i) {
        uint64_t swapped = ((vw[i] & even) << 1) | ((vw[i] & ~even) >> 1);
        acc ^= uw[i] & swapped;
    }
    return __builtin_popcountll(acc) & 1;
}

} // namespace fragmentia
