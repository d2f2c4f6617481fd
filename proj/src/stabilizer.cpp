#include "fragmentia/stabilizer.hpp"

#include <stdexcept>

#include "fragmentia/gf2.hpp"

namespace fragmentia {

StabilizerTableau StabilizerTableau::init_zero(int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    StabilizerTableau t;
    t.n = n;
    for (int i = 0; i < n; ++i) t.generators.push_back(PauliString::single(n, i, 'Z'));
    return t;
}

int StabilizerTableau::rank() const {
    GF2Subspace s(2 * std::size_t(n));
    for (const auto &g : generators) s.insert(g.bits());
    return int(s.dim());
}

bool StabilizerTableau::commuting() const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            if (!generators[i].commutes_with(generators[j])) return false;
    return true;
}

int StabilizerTableau::entropy(int cut) const {
    if (cut <= 0 || cut >= n) throw std::invalid_argument("cut must leave both sides non-empty");
    // N_L = n - rank(G restricted to R); S = |L| - N_L.
    std::vector<int> right;
    for (int s = cut; s < n; ++s) right.push_back(s);
    GF2Subspace restricted(2 * std::size_t(n));
    for (const auto &g : generators) {
        BitVec v(2 * std::size_t(n));
        for (int s : right) {
            v.set(2 * s, g.bits().get(2 * s));
            v.set(2 * s + 1, g.bits().get(2 * s + 1));
        }
        restricted.insert(v);
    }
    int n_l = n - int(restricted.dim());
    return cut - n_l;
}

void evolve(StabilizerTableau &t, const FloquetCircuit &c, int periods) {
    if (t.n != c.n) throw std::invalid_argument("qubit count mismatch");
    for (bool m : c.mask)
        if (m) throw std::invalid_argument("circuit has rotations; stabilizer path requires p=0");
    CliffordTableau period = clifford_tableau(c);
    for (int r = 0; r < periods; ++r)
        for (auto &g : t.generators) g = period.conjugate(g);
}

} // namespace fragmentia
