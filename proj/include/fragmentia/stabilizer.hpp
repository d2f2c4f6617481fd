#pragma once

#include <vector>

#include "fragmentia/circuit.hpp"
#include "fragmentia/pauli.hpp"

namespace fragmentia {

// Stabilizer state as n commuting independent signed Pauli generators.
struct StabilizerTableau {
    int n = 0;
    std::vector<PauliString> generators;

    static StabilizerTableau init_zero(int n); // {+Z_i}

    // Entanglement entropy in bits across a contiguous cut: the left side is
    // sites [0, cut), S = |L| - N_L with N_L the rank of the generator group
    // restricted to L.
    int entropy(int cut) const;

    // Rank of the 2n-bit generator matrix; n for a valid tableau.
    int rank() const;

    bool commuting() const;
};

// One Floquet period of the p=0 circuit with sign tracking.  Circuits with
// rotations are not simulable here; use the dense path.
void evolve(StabilizerTableau &t, const FloquetCircuit &c, int periods = 1);

} // namespace fragmentia
