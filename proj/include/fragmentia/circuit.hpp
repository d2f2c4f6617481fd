#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fragmentia/clifford.hpp"
#include "fragmentia/gf2.hpp"
#include "fragmentia/pauli.hpp"
#include "fragmentia/rng.hpp"

namespace fragmentia {

struct GateInstance {
    int site = 0; // acts on (site, site+1)
    TwoQubitClifford gate;
};

struct EdgeGate {
    int site = 0;
    int layer = 0; // 0 = even sub-layer, 1 = odd sub-layer
    SingleQubitClifford gate;
};

// One Floquet period: even-bond Clifford layer, odd-bond Clifford layer, then
// a stochastic layer of Haar SU(2) rotations on masked sites.
struct FloquetCircuit {
    int n = 0;
    double p = 0.0;
    uint64_t seed = 0;
    std::vector<GateInstance> even_layer;
    std::vector<GateInstance> odd_layer;
    std::vector<EdgeGate> edge_gates; // brickwork truncation at the chain ends
    std::vector<bool> mask;           // perturbation mask, one flag per site
    std::vector<Quaternion> rotations; // per site; identity where unmasked

    // Gate on bond (site, site+1); every interior bond exists in exactly one
    // sub-layer (even bonds in the even layer).
    const TwoQubitClifford &bond_gate(int site) const;
    TwoQubitClifford &bond_gate(int site);
};

FloquetCircuit build_floquet(int n, double p, uint64_t seed);
FloquetCircuit build_floquet(int n, double p, Rng &rng);

// n-qubit Clifford tableau: signed images of every X_i and Z_i.
struct CliffordTableau {
    int n = 0;
    std::vector<PauliString> images; // X_0, Z_0, X_1, Z_1, ...

    static CliffordTableau identity(int n);
    void apply_gate(const TwoQubitClifford &g, int site);
    void apply_gate(const SingleQubitClifford &g, int site);
    PauliString conjugate(const PauliString &p) const;
    SymplecticMatrix symplectic() const;
};

// Symplectic image (with sign data) of the circuit's Clifford part; the
// rotation layer is not Clifford and is excluded.
CliffordTableau clifford_tableau(const FloquetCircuit &c);
SymplecticMatrix symplectic_image(const FloquetCircuit &c);

// Staircase reduction: the k+1 gates on the k+2 sites
// [start_site, start_site+k+1], composed in sub-layer order.
struct ReducedCircuit {
    int k = 0;                            // wall width under test
    int first_parity = 0;                 // sub-layer of gates[0] (0 = applied first)
    std::vector<TwoQubitClifford> gates;  // gates[j] acts on window sites (j, j+1)
    SymplecticMatrix symp;                // one-period image on 2(k+2) bits
    CliffordTableau tableau;              // sign-tracked version of symp

    int num_sites() const { return k + 2; }
};

ReducedCircuit make_staircase(std::vector<TwoQubitClifford> gates, int first_parity = 0);
ReducedCircuit reduce_staircase(const FloquetCircuit &c, int start_site, int k);

// Symplectic-level staircase composition for census work: 4x4 gate images
// embedded on k+2 sites, gates of sub-layer `parity` applied first.
SymplecticMatrix staircase_symplectic(const std::vector<SymplecticMatrix> &gates4, int first_parity);

// Exact-replay circuit files.
std::string circuit_to_json(const FloquetCircuit &c);
FloquetCircuit circuit_from_json(const std::string &json_text);

} // namespace fragmentia
