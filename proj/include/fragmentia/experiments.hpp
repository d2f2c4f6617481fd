#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fragmentia/circuit.hpp"
#include "fragmentia/dense.hpp"

namespace fragmentia {

enum class Setup { Localisation, PerturbedWall, Transport };

Setup parse_setup(const std::string &name); // "localisation" etc.; throws on junk
const char *setup_name(Setup s);

// Draw a circuit realization for the given setup:
//  - Localisation: a sampled 1-wall planted at half-chain, center unmasked.
//  - PerturbedWall: the same planting, but the wall's central site is masked
//    with a Haar rotation.
//  - Transport: rejection-sampled so no adjacent bond pair forms a 1-wall.
FloquetCircuit build_setup_circuit(Setup s, int n, double p, Rng &rng);

// Central site of the planted wall; the entropy cut sits just right of it.
inline int wall_center(int n) { return n / 2 - 1; }
inline int half_cut(int n) { return n / 2; }

struct EntropyTrace {
    std::vector<int> t;
    std::vector<double> mean;
    std::vector<double> stddev;
    std::vector<std::vector<double>> per_realization; // [r][t]
    int realizations = 0;
    int cut = 0;
    bool integer_valued = false; // stabilizer path (p = 0, no rotations)
};

// <S>(t) and dS(t) at the half-chain cut over the ensemble; realization r
// uses substream(seed, r).  Stabilizer path is auto-selected when the
// realization carries no rotations.
EntropyTrace entropy_experiment(Setup s, int n, double p, int realizations, int tmax,
                                uint64_t seed);

// First-period SFF over the ensemble; Ksmear filled with window dt_smear.
SFFTrace sff_experiment(Setup s, int n, double p, int realizations, int tmax, uint64_t seed,
                        int dt_smear);

} // namespace fragmentia
