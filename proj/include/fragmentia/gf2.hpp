#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fragmentia/bitvec.hpp"

namespace fragmentia {

// Row space over GF(2), kept in reduced row-echelon form so that equality of
// subspaces is bitwise equality of the basis.
class GF2Subspace {
  public:
    GF2Subspace() = default;
    explicit GF2Subspace(std::size_t ambient_bits) : ambient_(ambient_bits) {}

    static GF2Subspace span(std::size_t ambient_bits, const std::vector<BitVec> &vecs) {
        GF2Subspace s(ambient_bits);
        for (const auto &v : vecs) s.insert(v);
        return s;
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<BitVec> &basis() const { return rows_; }

    bool contains(const BitVec &v) const { return reduce(v).none(); }

    // Returns true if the dimension grew.
    bool insert(const BitVec &v);

    GF2Subspace operator+(const GF2Subspace &o) const {
        GF2Subspace s = *this;
        for (const auto &r : o.rows_) s.insert(r);
        return s;
    }

    GF2Subspace intersect(const GF2Subspace &o) const;

    // Zeroes every coordinate whose site (bit pair 2s, 2s+1) is not listed,
    // then re-reduces.
    GF2Subspace project_to_sites(const std::vector<int> &sites) const;

    bool operator==(const GF2Subspace &) const = default;

  private:
    BitVec reduce(BitVec v) const;

    std::size_t ambient_ = 0;
    std::vector<BitVec> rows_; // RREF, pivots strictly increasing
};

// Square matrix over GF(2), stored by columns.  Candidate symplectic matrices
// live here too; symplectic_check validates the defining relation.
class SymplecticMatrix {
  public:
    SymplecticMatrix() = default;
    explicit SymplecticMatrix(std::size_t dim) : dim_(dim), cols_(dim, BitVec(dim)) {}

    static SymplecticMatrix identity(std::size_t dim) {
        SymplecticMatrix m(dim);
        for (std::size_t j = 0; j < dim; ++j) m.cols_[j].set(j, true);
        return m;
    }

    // The binary symplectic form: a bit swap within every (x,z) pair.
    static SymplecticMatrix symplectic_form(std::size_t dim);

    std::size_t dim() const { return dim_; }
    bool get(std::size_t r, std::size_t c) const { return cols_[c].get(r); }
    void set(std::size_t r, std::size_t c, bool v) { cols_[c].set(r, v); }
    const BitVec &col(std::size_t c) const { return cols_[c]; }
    void set_col(std::size_t c, BitVec v) { cols_[c] = std::move(v); }

    BitVec apply(const BitVec &v) const {
        if (v.size() != dim_) throw std::invalid_argument("dimension mismatch");
        BitVec out(dim_);
        for (std::size_t j = 0; j < dim_; ++j)
            if (v.get(j)) out ^= cols_[j];
        return out;
    }

    SymplecticMatrix operator*(const SymplecticMatrix &o) const {
        if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
        SymplecticMatrix out(dim_);
        for (std::size_t j = 0; j < dim_; ++j) out.cols_[j] = apply(o.cols_[j]);
        return out;
    }

    SymplecticMatrix transpose() const {
        SymplecticMatrix out(dim_);
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t i = 0; i < dim_; ++i)
                if (get(i, j)) out.set(j, i, true);
        return out;
    }

    bool operator==(const SymplecticMatrix &) const = default;

    // Dense row-major bit dump, usable as a hash/dedup key.
    std::vector<uint64_t> key() const {
        std::vector<uint64_t> k;
        for (const auto &c : cols_)
            for (uint64_t w : c.words()) k.push_back(w);
        return k;
    }

  private:
    std::size_t dim_ = 0;
    std::vector<BitVec> cols_;
};

// True iff S J S^T = J over GF(2).  Throws on odd dimension.
bool symplectic_check(const SymplecticMatrix &m);

// Smallest M-invariant subspace containing V0, by iterating V + M V until the
// dimension stabilises.
GF2Subspace closure(const SymplecticMatrix &m, const GF2Subspace &v0);

struct MatrixOrder {
    uint64_t order = 0;
    bool capped = false; // true means "order > cap", not a failure
};

MatrixOrder matrix_order(const SymplecticMatrix &m, uint64_t cap = uint64_t(1) << 16);

} // namespace fragmentia
