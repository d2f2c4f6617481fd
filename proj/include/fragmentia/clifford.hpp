#pragma once

#include <array>
#include <complex>
#include <vector>

#include "fragmentia/gf2.hpp"
#include "fragmentia/pauli.hpp"
#include "fragmentia/rng.hpp"

namespace fragmentia {

// Embed an m-qubit Pauli into n qubits starting at `site`.
PauliString embed(const PauliString &local, int n, int site);

// Conjugate p by a Clifford acting on m qubits starting at `site`, given the
// signed images of the gate's 2m local generators (X_0, Z_0, X_1, Z_1, ...).
PauliString conjugate_by_images(const std::vector<PauliString> &images, int m, int site,
                                const PauliString &p);

// One of the 24 single-qubit Cliffords (6 symplectics x 4 sign assignments).
struct SingleQubitClifford {
    int index = 0;
    std::vector<PauliString> images;              // images of X and Z, 1-qubit signed Paulis
    SymplecticMatrix symp;                        // 2x2
    std::array<std::complex<double>, 4> matrix{}; // row-major 2x2, fixed global phase
};

const std::vector<SingleQubitClifford> &c1_table();
const SingleQubitClifford &sample_c1(Rng &rng);

// True iff conjugation maps the single-site Pauli to itself up to sign.
bool c1_preserves(const SingleQubitClifford &g, char pauli);

enum class GateClass { Identity, CZ, SWAP, FSWAP };
const char *gate_class_name(GateClass c);

// Two-qubit Clifford in the dressed-representative parametrization:
// (a (x) b) * REP * (c (x) d) with a,b,c,d single-qubit Cliffords.
struct TwoQubitClifford {
    GateClass cls = GateClass::Identity;
    std::array<int, 4> dressing{0, 0, 0, 0}; // indices into c1_table(): out0, out1, in0, in1
    std::vector<PauliString> images;         // images of X0, Z0, X1, Z1 (2-qubit signed Paulis)
    SymplecticMatrix symp;                   // 4x4
};

TwoQubitClifford make_gate(GateClass cls, const std::array<int, 4> &dressing = {0, 0, 0, 0});

// Conjugation C p C~ with sign tracking; p must be a 2-qubit Pauli.
PauliString conjugate(const TwoQubitClifford &g, const PauliString &p);
PauliString conjugate(const SingleQubitClifford &g, const PauliString &p);

// Support-pattern classification of a 4x4 symplectic into the Table of
// equivalence classes w.r.t. product Cliffords.
GateClass classify(const SymplecticMatrix &symp4);

// All 720 elements of Sp(4, GF(2)), cached.  Census: {36, 324, 36, 324}.
const std::vector<SymplecticMatrix> &enumerate_sp4();
std::array<int, 4> sp4_class_census(); // indexed by GateClass

// The 684 non-product elements (Identity class removed), cached.
const std::vector<SymplecticMatrix> &sp4_nonproduct();

// Uniform over non-product Cliffords: class weights CZ:SWAP:FSWAP = 9:1:9,
// dressed with uniform single-qubit Cliffords (sign data uniform).
TwoQubitClifford sample_nonproduct(Rng &rng);

// Rejection route used to cross-check the construction above: uniform pick
// from the cached non-product symplectic list.
const SymplecticMatrix &sample_nonproduct_symplectic_rejection(Rng &rng);

} // namespace fragmentia
