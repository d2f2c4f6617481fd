#include "fragmentia/experiments.hpp"

#include <cmath>
#include <stdexcept>

#include "fragmentia/parallel.hpp"
#include "fragmentia/stabilizer.hpp"
#include "fragmentia/walls.hpp"

namespace fragmentia {

Setup parse_setup(const std::string &name) {
    if (name == "localisation") return Setup::Localisation;
    if (name == "perturbed_wall") return Setup::PerturbedWall;
    if (name == "transport") return Setup::Transport;
    throw std::invalid_argument("unknown setup: " + name);
}

const char *setup_name(Setup s) {
    switch (s) {
    case Setup::Localisation: return "localisation";
    case Setup::PerturbedWall: return "perturbed_wall";
    case Setup::Transport: return "transport";
    }
    throw std::invalid_argument("bad setup tag");
}

namespace {

TwoQubitClifford random_cz_gate(Rng &rng) {
    std::uniform_int_distribution<int> d(0, 23);
    return make_gate(GateClass::CZ, {d(rng), d(rng), d(rng), d(rng)});
}

void plant_wall(FloquetCircuit &c, Rng &rng) {
    int center = wall_center(c.n);
    if (center < 1 || center + 1 >= c.n) throw std::invalid_argument("chain too short to plant");
    TwoQubitClifford g0, g1;
    do {
        g0 = random_cz_gate(rng);
        g1 = random_cz_gate(rng);
    } while (!is_wall(make_staircase({g0, g1}, (center - 1) % 2), Side::Left));
    c.bond_gate(center - 1) = g0;
    c.bond_gate(center) = g1;
}

bool has_1wall(const FloquetCircuit &c) {
    for (int start = 0; start + 3 <= c.n; ++start)
        if (is_wall(reduce_staircase(c, start, 1), Side::Left)) return true;
    return false;
}

} // namespace

FloquetCircuit build_setup_circuit(Setup s, int n, double p, Rng &rng) {
    switch (s) {
    case Setup::Localisation: {
        FloquetCircuit c = build_floquet(n, p, rng);
        plant_wall(c, rng);
        c.mask[wall_center(n)] = false;
        c.rotations[wall_center(n)] = Quaternion{};
        return c;
    }
    case Setup::PerturbedWall: {
        FloquetCircuit c = build_floquet(n, p, rng);
        plant_wall(c, rng);
        c.mask[wall_center(n)] = true;
        c.rotations[wall_center(n)] = haar_su2(rng);
        return c;
    }
    case Setup::Transport: {
        for (;;) {
            FloquetCircuit c = build_floquet(n, p, rng);
            if (!has_1wall(c)) return c;
        }
    }
    }
    throw std::invalid_argument("bad setup tag");
}

EntropyTrace entropy_experiment(Setup s, int n, double p, int realizations, int tmax,
                                uint64_t seed) {
    if (realizations < 1 || tmax < 1) throw std::invalid_argument("need realizations, tmax >= 1");
    EntropyTrace tr;
    tr.realizations = realizations;
    tr.cut = half_cut(n);
    tr.integer_valued = true;
    tr.per_realization.assign(realizations, {});
    std::vector<char> dense_used(realizations, 0);

    parallel_for(std::size_t(realizations), [&](std::size_t r) {
        Rng rng = substream(seed, r);
        FloquetCircuit c = build_setup_circuit(s, n, p, rng);
        bool rotations = false;
        for (bool m : c.mask) rotations |= m;
        std::vector<double> trace(tmax + 1, 0.0);
        if (!rotations) {
            StabilizerTableau tab = StabilizerTableau::init_zero(n);
            for (int t = 1; t <= tmax; ++t) {
                evolve(tab, c);
                trace[t] = double(tab.entropy(tr.cut));
            }
        } else {
            dense_used[r] = 1;
            StateVector psi = StateVector::zero(n);
            for (int t = 1; t <= tmax; ++t) {
                psi.apply_period(c);
                trace[t] = vn_entropy(psi, tr.cut);
            }
        }
        tr.per_realization[r] = std::move(trace);
    });

    for (char d : dense_used)
        if (d) tr.integer_valued = false;
    for (int t = 0; t <= tmax; ++t) {
        double m = 0.0, m2 = 0.0;
        for (int r = 0; r < realizations; ++r) {
            double v = tr.per_realization[r][t];
            m += v;
            m2 += v * v;
        }
        m /= realizations;
        m2 /= realizations;
        tr.t.push_back(t);
        tr.mean.push_back(m);
        tr.stddev.push_back(std::sqrt(std::max(0.0, m2 - m * m)));
    }
    return tr;
}

SFFTrace sff_experiment(Setup s, int n, double p, int realizations, int tmax, uint64_t seed,
                        int dt_smear) {
    if (realizations < 1 || tmax < 1) throw std::invalid_argument("need realizations, tmax >= 1");
    std::vector<std::vector<double>> phase_sets(realizations);
    parallel_for(std::size_t(realizations), [&](std::size_t r) {
        Rng rng = substream(seed, r);
        FloquetCircuit c = build_setup_circuit(s, n, p, rng);
        phase_sets[r] = eigenphases(build_unitary(c));
    });
    SFFTrace tr = sff_from_phases(phase_sets, 1 << n, tmax);
    Rng srng = substream(seed, uint64_t(realizations) + 1);
    tr.Ksmear = gaussian_smear(tr.K, dt_smear, srng);
    return tr;
}

} // namespace fragmentia
