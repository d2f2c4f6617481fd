#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fragmentia/pauli.hpp"
#include "oracle.hpp"

using namespace fragmentia;

TEST_CASE("single-site constructors") {
    CHECK(PauliString::single(3, 0, 'X').str() == "+XII");
    CHECK(PauliString::single(3, 1, 'Y').str() == "+IYI");
    CHECK(PauliString::single(3, 2, 'Z').str() == "+IIZ");
    CHECK(PauliString::single(2, 0, 'I').is_identity());
    CHECK_THROWS_AS(PauliString::single(2, 0, 'Q'), std::invalid_argument);
}

TEST_CASE("hermitian representative has sign +1") {
    for (int bits = 0; bits < 16; ++bits) {
        BitVec v(4);
        for (int b = 0; b < 4; ++b) v.set(b, (bits >> b) & 1);
        PauliString p = PauliString::hermitian(2, v);
        CHECK(p.sign() == 1);
        Eigen::MatrixXcd m = oracle::pauli_matrix(p);
        CHECK((m - m.adjoint()).norm() < 1e-12);
    }
}

TEST_CASE("product follows the matrix algebra") {
    // X * Z = -iY, so (X*Z) is anti-Hermitian and sign() must throw.
    PauliString x = PauliString::single(1, 0, 'X');
    PauliString z = PauliString::single(1, 0, 'Z');
    PauliString xz = x * z;
    CHECK(xz.bits() == (x.bits() ^ z.bits()));
    CHECK_THROWS_AS(xz.sign(), std::logic_error);
    CHECK((oracle::pauli_matrix(x) * oracle::pauli_matrix(z) -
           std::complex<double>(0, -1) * oracle::pauli_matrix(PauliString::single(1, 0, 'Y')))
              .norm() < 1e-12);

    // Y = iXZ: hermitian constructor phase
    BitVec y(2);
    y.set(0, true);
    y.set(1, true);
    CHECK(PauliString::hermitian(1, y).phase_exp() == 1);
}

TEST_CASE("product phases match dense multiplication") {
    Rng rng = make_rng(123);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        BitVec a(6), b(6);
        for (int i = 0; i < 6; ++i) {
            a.set(i, bit(rng));
            b.set(i, bit(rng));
        }
        PauliString pa = PauliString::hermitian(3, a), pb = PauliString::hermitian(3, b);
        PauliString prod = pa * pb;
        Eigen::MatrixXcd dense = oracle::pauli_matrix(pa) * oracle::pauli_matrix(pb);
        // peel the result back to its Hermitian representative and reapply the
        // phase difference
        PauliString herm = PauliString::hermitian(3, prod.bits());
        Eigen::MatrixXcd viaphase =
            std::pow(std::complex<double>(0, 1), ((prod.phase_exp() - herm.phase_exp()) % 4 + 4) % 4) *
            oracle::pauli_matrix(herm);
        CHECK((dense - viaphase).norm() < 1e-10);
    }
}

TEST_CASE("commutation matches symplectic product") {
    PauliString xx(2), zz(2);
    xx.set_x(0, true);
    xx.set_x(1, true);
    zz.set_z(0, true);
    zz.set_z(1, true);
    CHECK(xx.commutes_with(zz));
    CHECK(PauliString::single(2, 0, 'X').commutes_with(PauliString::single(2, 1, 'Z')));
    CHECK_FALSE(PauliString::single(2, 0, 'X').commutes_with(PauliString::single(2, 0, 'Z')));
}

TEST_CASE("string rendering") {
    PauliString p(2);
    p.set_x(0, true);
    p.set_z(1, true);
    CHECK(p.str() == "+XZ");
    PauliString y = PauliString::single(1, 0, 'Y');
    PauliString my(1, y.bits(), (y.phase_exp() + 2) % 4);
    CHECK(my.sign() == -1);
    CHECK(my.str() == "-Y");
}
