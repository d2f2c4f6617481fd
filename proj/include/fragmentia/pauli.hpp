#pragma once

#include <stdexcept>
#include <string>

#include "fragmentia/bitvec.hpp"

namespace fragmentia {

// n-qubit Pauli operator: i^phase_exp * prod_s X_s^{x_s} Z_s^{z_s}, with the
// 2n support bits interleaved as (x_1, z_1, ..., x_n, z_n).
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(int n) : n_(n), bits_(2 * std::size_t(n)) {}
    PauliString(int n, BitVec bits, int phase_exp)
        : n_(n), bits_(std::move(bits)), phase_(((phase_exp % 4) + 4) % 4) {
        if (bits_.size() != 2 * std::size_t(n)) throw std::invalid_argument("bits length must be 2n");
    }

    // Hermitian representative of a support vector: phase i^(#Y sites), so
    // every Y factor is i*XZ and the overall sign is +1.
    static PauliString hermitian(int n, const BitVec &bits);

    static PauliString single(int n, int site, char pauli); // 'X','Y','Z','I'

    int num_qubits() const { return n_; }
    const BitVec &bits() const { return bits_; }
    int phase_exp() const { return phase_; }

    bool x(int s) const { return bits_.get(2 * s); }
    bool z(int s) const { return bits_.get(2 * s + 1); }
    void set_x(int s, bool v) { bits_.set(2 * s, v); }
    void set_z(int s, bool v) { bits_.set(2 * s + 1, v); }

    bool identity_support() const { return bits_.none(); }
    bool is_identity() const { return bits_.none() && phase_ == 0; }

    // +1 or -1 relative to the Hermitian representative of the same bits.
    // Throws if the phase is imaginary (non-Hermitian operator).
    int sign() const;

    bool commutes_with(const PauliString &o) const { return !symplectic_product(bits_, o.bits_); }

    PauliString operator*(const PauliString &o) const;

    bool operator==(const PauliString &) const = default;

    std::string str() const; // e.g. "+XIZ"

  private:
    int y_count() const;

    int n_ = 0;
    BitVec bits_;
    int phase_ = 0; // mod 4
};

} // namespace fragmentia
