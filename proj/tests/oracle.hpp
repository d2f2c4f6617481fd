#pragma once

// Independent reference implementations used only by the tests.

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "fragmentia/gf2.hpp"
#include "fragmentia/pauli.hpp"
#include "fragmentia/walls.hpp"

namespace oracle {

// Brute-force wall decision: iterate every boundary generator under the
// period map for 4x the (capped) matrix order and watch the opposite
// boundary site.  Deliberately avoids the closure machinery.
inline bool is_wall(const fragmentia::SymplecticMatrix &period, fragmentia::Side side) {
    using namespace fragmentia;
    std::size_t dim = period.dim();
    int sites = int(dim / 2);
    int b = side == Side::Left ? 0 : sites - 1;
    int opposite = sites - 1 - b;
    MatrixOrder ord = matrix_order(period, 4096);
    uint64_t T = 4 * (ord.capped ? 4096 : ord.order);
    for (std::size_t g = 0; g < 2; ++g) {
        BitVec v = BitVec::unit(dim, 2 * std::size_t(b) + g);
        for (uint64_t t = 0; t < T; ++t) {
            v = period.apply(v);
            if (v.get(2 * std::size_t(opposite)) || v.get(2 * std::size_t(opposite) + 1))
                return false;
        }
    }
    return true;
}

// Dense matrix of an n-qubit Pauli with its sign, site 0 most significant.
inline Eigen::MatrixXcd pauli_matrix(const fragmentia::PauliString &p) {
    using namespace std::complex_literals;
    Eigen::Matrix2cd X, Y, Z, I2;
    X << 0, 1, 1, 0;
    Y << 0, -1i, 1i, 0;
    Z << 1, 0, 0, -1;
    I2.setIdentity();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (int s = p.num_qubits() - 1; s >= 0; --s) {
        const Eigen::Matrix2cd &f = p.x(s) && p.z(s) ? Y : p.x(s) ? X : p.z(s) ? Z : I2;
        Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) next.block(i * m.rows(), j * m.cols(), m.rows(), m.cols()) = f(i, j) * m;
        m = next;
    }
    return double(p.sign()) * m;
}

} // namespace oracle
