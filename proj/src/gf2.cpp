#include "fragmentia/gf2.hpp"

#include <algorithm>

namespace fragmentia {

BitVec GF2Subspace::reduce(BitVec v) const {
    for (const auto &r : rows_) {
        std::size_t p = r.lowest_bit();
        if (v.get(p)) v ^= r;
    }
    return v;
}

bool GF2Subspace::insert(const BitVec &vin) {
    BitVec v = reduce(vin);
    if (v.none()) return false;
    std::size_t p = v.lowest_bit();
    // Back-substitute to keep full RREF.
    for (auto &r : rows_)
        if (r.get(p)) r ^= v;
    auto it = std::lower_bound(rows_.begin(), rows_.end(), p,
                               [](const BitVec &r, std::size_t piv) { return r.lowest_bit() < piv; });
    rows_.insert(it, std::move(v));
    return true;
}

GF2Subspace GF2Subspace::intersect(const GF2Subspace &o) const {
    // Zassenhaus: row reduce [A|A; B|0]; rows with zero left half carry an
    // intersection basis in their right half.
    std::size_t m = ambient_;
    std::vector<BitVec> work;
    for (const auto &a : rows_) {
        BitVec row(2 * m);
        for (std::size_t i = 0; i < m; ++i)
            if (a.get(i)) {
                row.set(i, true);
                row.set(m + i, true);
            }
        work.push_back(std::move(row));
    }
    for (const auto &b : o.rows_) {
        BitVec row(2 * m);
        for (std::size_t i = 0; i < m; ++i)
            if (b.get(i)) row.set(i, true);
        work.push_back(std::move(row));
    }
    GF2Subspace echelon(2 * m);
    for (const auto &r : work) echelon.insert(r);

    GF2Subspace out(m);
    for (const auto &r : echelon.basis()) {
        if (r.lowest_bit() >= m) {
            BitVec v(m);
            for (std::size_t i = 0; i < m; ++i)
                if (r.get(m + i)) v.set(i, true);
            out.insert(v);
        }
    }
    return out;
}

GF2Subspace GF2Subspace::project_to_sites(const std::vector<int> &sites) const {
    BitVec mask(ambient_);
    for (int s : sites) {
        if (s < 0 || std::size_t(2 * s + 1) >= ambient_)
            throw std::out_of_range("site index out of range");
        mask.set(2 * s, true);
        mask.set(2 * s + 1, true);
    }
    GF2Subspace out(ambient_);
    for (const auto &r : rows_) {
        BitVec v(ambient_);
        for (std::size_t i = 0; i < ambient_; ++i)
            if (mask.get(i) && r.get(i)) v.set(i, true);
        out.insert(v);
    }
    return out;
}

SymplecticMatrix SymplecticMatrix::symplectic_form(std::size_t dim) {
    if (dim % 2) throw std::invalid_argument("symplectic form needs even dimension");
    SymplecticMatrix j(dim);
    for (std::size_t i = 0; i < dim; i += 2) {
        j.set(i, i + 1, true);
        j.set(i + 1, i, true);
    }
    return j;
}

bool symplectic_check(const SymplecticMatrix &m) {
    if (m.dim() % 2) throw std::invalid_argument("symplectic candidate must have even dimension");
    auto j = SymplecticMatrix::symplectic_form(m.dim());
    return m * j * m.transpose() == j;
}

GF2Subspace closure(const SymplecticMatrix &m, const GF2Subspace &v0) {
    if (v0.ambient() != m.dim()) throw std::invalid_argument("dimension mismatch");
    GF2Subspace v = v0;
    std::vector<BitVec> frontier(v0.basis().begin(), v0.basis().end());
    while (!frontier.empty()) {
        std::vector<BitVec> next;
        for (const auto &f : frontier) {
            BitVec w = m.apply(f);
            if (v.insert(w)) next.push_back(std::move(w));
        }
        frontier = std::move(next);
    }
    return v;
}

MatrixOrder matrix_order(const SymplecticMatrix &m, uint64_t cap) {
    auto id = SymplecticMatrix::identity(m.dim());
    SymplecticMatrix p = m;
    for (uint64_t t = 1; t <= cap; ++t) {
        if (p == id) return {t, false};
        p = m * p;
    }
    return {cap, true};
}

} // namespace fragmentia
