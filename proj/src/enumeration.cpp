#include "fragmentia/enumeration.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "fragmentia/walls.hpp"

namespace fragmentia {

namespace {

std::vector<SymplecticMatrix> sp4_by_class(GateClass cls) {
    std::vector<SymplecticMatrix> out;
    for (const auto &m : enumerate_sp4())
        if (classify(m) == cls) out.push_back(m);
    return out;
}

SymplecticMatrix embed2in4(const SymplecticMatrix &two, int leg) {
    SymplecticMatrix m = SymplecticMatrix::identity(4);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) m.set(2 * leg + r, 2 * leg + c, two.get(r, c));
    return m;
}

const std::vector<SymplecticMatrix> &c1_symplectics() {
    static const std::vector<SymplecticMatrix> six = [] {
        std::vector<SymplecticMatrix> out;
        for (const auto &g : c1_table()) {
            bool fresh = true;
            for (const auto &m : out)
                if (m == g.symp) fresh = false;
            if (fresh) out.push_back(g.symp);
        }
        if (out.size() != 6) throw std::logic_error("expected 6 single-qubit symplectics");
        return out;
    }();
    return six;
}

// Orbit representatives of a gate-class list under pre/post dressing on one
// local leg; wallness of a staircase does not depend on the outer-leg
// dressing of its end gates, so each orbit contributes with its size.
std::vector<std::pair<SymplecticMatrix, uint64_t>>
leg_orbit_reps(const std::vector<SymplecticMatrix> &cls, int leg) {
    std::map<std::vector<uint64_t>, std::size_t> index;
    for (std::size_t i = 0; i < cls.size(); ++i) index[cls[i].key()] = i;
    std::vector<bool> seen(cls.size(), false);
    std::vector<std::pair<SymplecticMatrix, uint64_t>> reps;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> orbit{i};
        seen[i] = true;
        for (std::size_t q = 0; q < orbit.size(); ++q)
            for (const auto &a : c1_symplectics())
                for (const auto &c : c1_symplectics()) {
                    SymplecticMatrix g = embed2in4(a, leg) * cls[orbit[q]] * embed2in4(c, leg);
                    std::size_t j = index.at(g.key());
                    if (!seen[j]) {
                        seen[j] = true;
                        orbit.push_back(j);
                    }
                }
        reps.emplace_back(cls[i], orbit.size());
    }
    return reps;
}

GF2Subspace boundary_closure(const SymplecticMatrix &period, int site) {
    std::size_t dim = period.dim();
    return closure(period, GF2Subspace::span(dim, {BitVec::unit(dim, 2 * site),
                                                   BitVec::unit(dim, 2 * site + 1)}));
}

bool interference_free_symp(const SymplecticMatrix &m) {
    int sites = int(m.dim() / 2);
    std::vector<int> central;
    for (int s = 1; s <= sites - 2; ++s) central.push_back(s);
    GF2Subspace g_left = boundary_closure(m, 0).project_to_sites(central);
    GF2Subspace g_right = boundary_closure(m, sites - 1).project_to_sites(central);
    return factors_per_site(g_left, central) && factors_per_site(g_right, central);
}

CensusResult census_2wall(GateClass middle, int first_parity) {
    const auto ends = sp4_by_class(GateClass::CZ);
    const auto mids = sp4_by_class(middle);
    const auto left_reps = leg_orbit_reps(ends, 0);
    const auto right_reps = leg_orbit_reps(ends, 1);
    CensusResult res;
    for (const auto &[l, wl] : left_reps)
        for (const auto &m : mids)
            for (const auto &[r, wr] : right_reps) {
                uint64_t w = wl * wr;
                res.total += w;
                SymplecticMatrix period = staircase_symplectic({l, m, r}, first_parity);
                if (!is_wall_symp(period, Side::Left)) continue;
                res.walls += w;
                if (interference_free_symp(period))
                    res.interference_free += w;
                else
                    res.interfering += w;
            }
    return res;
}

} // namespace

CensusResult census_1wall(int first_parity) {
    const auto ends = sp4_by_class(GateClass::CZ);
    CensusResult res;
    for (const auto &a : ends)
        for (const auto &b : ends) {
            ++res.total;
            SymplecticMatrix period = staircase_symplectic({a, b}, first_parity);
            if (!is_wall_symp(period, Side::Left)) continue;
            ++res.walls;
            if (interference_free_symp(period))
                ++res.interference_free;
            else
                ++res.interfering;
        }
    return res;
}

CensusResult census_2wall_swap(int first_parity) { return census_2wall(GateClass::SWAP, first_parity); }

CensusResult census_2wall_fswap(int first_parity) { return census_2wall(GateClass::FSWAP, first_parity); }

Rational exact_1wall_probability() {
    static const Rational r = [] {
        CensusResult c = census_1wall();
        if (9 * c.walls != c.total) throw std::logic_error("1-wall census fraction is not 1/9");
        return Rational{9, 361};
    }();
    return r;
}

Rational exact_2wall_probability() {
    static const Rational r = [] {
        CensusResult s = census_2wall_swap();
        CensusResult f = census_2wall_fswap();
        if (9 * s.walls != s.total || 9 * f.walls != f.total)
            throw std::logic_error("2-wall census fraction is not 1/9");
        return Rational{90, 6859};
    }();
    return r;
}

std::pair<int, int> enumerate_fswap_2walls() {
    CensusResult f = census_2wall_fswap();
    if (9 * f.interference_free != 5 * f.walls || 9 * f.interfering != 4 * f.walls)
        throw std::logic_error("FSWAP 2-wall census split is not 5:4");
    return {5, 4};
}

std::vector<WallCensusRow> montecarlo_wall_prob(int k_max, uint64_t samples, uint64_t seed) {
    if (k_max < 1 || k_max > 3 || samples == 0)
        throw std::invalid_argument("need k_max in {1,2,3} and samples > 0");
    std::vector<WallCensusRow> rows;
    for (int k = 1; k <= k_max; ++k) {
        Rng rng = substream(seed, uint64_t(k));
        WallCensusRow row;
        row.k = k;
        row.samples = samples;
        for (uint64_t s = 0; s < samples; ++s) {
            std::vector<SymplecticMatrix> gates;
            for (int j = 0; j <= k; ++j) gates.push_back(sample_nonproduct(rng).symp);
            if (is_irreducible_wall_symp(gates, 0)) ++row.hits;
        }
        row.estimate = double(row.hits) / double(samples);
        row.stderr_ = std::sqrt(row.estimate * (1.0 - row.estimate) / double(samples));
        row.exact = k == 1   ? exact_1wall_probability().value()
                    : k == 2 ? exact_2wall_probability().value()
                             : std::nan("");
        row.sigma_deviation = row.stderr_ > 0.0 && !std::isnan(row.exact)
                                  ? (row.estimate - row.exact) / row.stderr_
                                  : std::nan("");
        rows.push_back(row);
    }
    return rows;
}

std::string wall_census_csv(const std::vector<WallCensusRow> &rows) {
    std::string out = "k,samples,hits,estimate,stderr,exact,sigma_deviation\n";
    char buf[256];
    for (const auto &r : rows) {
        std::snprintf(buf, sizeof buf, "%d,%llu,%llu,%.10g,%.10g,%.10g,%.10g\n", r.k,
                      (unsigned long long)r.samples, (unsigned long long)r.hits, r.estimate,
                      r.stderr_, r.exact, r.sigma_deviation);
        out += buf;
    }
    return out;
}

} // namespace fragmentia
