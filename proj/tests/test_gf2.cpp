#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fragmentia/gf2.hpp"

using namespace fragmentia;

TEST_CASE("bitvec basics") {
    BitVec v(130);
    CHECK(v.none());
    v.set(0, true);
    v.set(129, true);
    CHECK(v.get(0));
    CHECK(v.get(129));
    CHECK_FALSE(v.get(64));
    CHECK(v.popcount() == 2);
    CHECK(v.lowest_bit() == 0);
    v.flip(0);
    CHECK(v.lowest_bit() == 129);
    BitVec w(130);
    w.set(129, true);
    CHECK((v ^ w).none());
}

TEST_CASE("symplectic product on interleaved pairs") {
    // x_0 vs z_0 anticommute, x_0 vs x_0 commute, disjoint sites commute.
    BitVec x0 = BitVec::unit(4, 0), z0 = BitVec::unit(4, 1), x1 = BitVec::unit(4, 2);
    CHECK(symplectic_product(x0, z0));
    CHECK(symplectic_product(z0, x0));
    CHECK_FALSE(symplectic_product(x0, x0));
    CHECK_FALSE(symplectic_product(x0, x1));
    BitVec y0 = x0 ^ z0;
    CHECK(symplectic_product(y0, x0));
    CHECK(symplectic_product(y0, z0));
    CHECK_FALSE(symplectic_product(y0, y0));
}

TEST_CASE("subspace insert and containment") {
    GF2Subspace s(6);
    CHECK(s.dim() == 0);
    CHECK(s.contains(BitVec(6)));
    CHECK(s.insert(BitVec::unit(6, 1)));
    CHECK(s.insert(BitVec::unit(6, 4)));
    CHECK_FALSE(s.insert(BitVec::unit(6, 1) ^ BitVec::unit(6, 4)));
    CHECK(s.dim() == 2);
    CHECK(s.contains(BitVec::unit(6, 4)));
    CHECK_FALSE(s.contains(BitVec::unit(6, 0)));
}

TEST_CASE("rref form is canonical") {
    GF2Subspace a(4), b(4);
    BitVec v1 = BitVec::unit(4, 0) ^ BitVec::unit(4, 2);
    BitVec v2 = BitVec::unit(4, 2);
    a.insert(v1);
    a.insert(v2);
    b.insert(v2);
    b.insert(v1);
    CHECK(a == b);
    for (const auto &r : a.basis()) CHECK(r.any());
}

TEST_CASE("intersection via zassenhaus") {
    GF2Subspace a(4), b(4);
    a.insert(BitVec::unit(4, 0));
    a.insert(BitVec::unit(4, 1));
    b.insert(BitVec::unit(4, 1));
    b.insert(BitVec::unit(4, 2));
    GF2Subspace i = a.intersect(b);
    CHECK(i.dim() == 1);
    CHECK(i.contains(BitVec::unit(4, 1)));

    GF2Subspace c(4);
    c.insert(BitVec::unit(4, 2) ^ BitVec::unit(4, 3));
    CHECK(a.intersect(c).dim() == 0);
    CHECK(a.intersect(a) == a);
}

TEST_CASE("project to sites") {
    GF2Subspace s(6);
    s.insert(BitVec::unit(6, 0) ^ BitVec::unit(6, 3));
    s.insert(BitVec::unit(6, 4));
    GF2Subspace p = s.project_to_sites({1});
    CHECK(p.dim() == 1);
    CHECK(p.contains(BitVec::unit(6, 3)));
    CHECK_THROWS_AS(s.project_to_sites({7}), std::out_of_range);
}

TEST_CASE("symplectic form and check") {
    SymplecticMatrix j = SymplecticMatrix::symplectic_form(6);
    CHECK(symplectic_check(j));
    CHECK(symplectic_check(SymplecticMatrix::identity(6)));
    CHECK(j * j == SymplecticMatrix::identity(6));

    SymplecticMatrix bad = SymplecticMatrix::identity(4);
    bad.set(0, 0, false); // singular
    CHECK_FALSE(symplectic_check(bad));
    CHECK_THROWS_AS(symplectic_check(SymplecticMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("matrix apply and multiply") {
    // transvection-like map on 2 bits: swap the two coordinates
    SymplecticMatrix m(2);
    m.set(0, 1, true);
    m.set(1, 0, true);
    CHECK(m.apply(BitVec::unit(2, 0)) == BitVec::unit(2, 1));
    CHECK(m * m == SymplecticMatrix::identity(2));
    CHECK(m.transpose() == m);
}

TEST_CASE("closure reaches the invariant span") {
    // cyclic permutation of 3 pairs: closure of one site spans everything
    SymplecticMatrix m(6);
    for (std::size_t i = 0; i < 6; ++i) m.set((i + 2) % 6, i, true);
    GF2Subspace v0(6);
    v0.insert(BitVec::unit(6, 0));
    GF2Subspace v = closure(m, v0);
    CHECK(v.dim() == 3);
    CHECK(v.contains(BitVec::unit(6, 2)));
    CHECK(v.contains(BitVec::unit(6, 4)));
    // already invariant subspace stays put
    CHECK(closure(SymplecticMatrix::identity(6), v0) == v0);
}

TEST_CASE("matrix order") {
    CHECK(matrix_order(SymplecticMatrix::identity(4)).order == 1);
    SymplecticMatrix m(2);
    m.set(0, 1, true);
    m.set(1, 0, true);
    MatrixOrder o = matrix_order(m);
    CHECK(o.order == 2);
    CHECK_FALSE(o.capped);
    MatrixOrder c = matrix_order(m, 1);
    CHECK(c.capped);
}
