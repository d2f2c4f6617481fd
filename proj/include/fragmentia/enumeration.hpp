#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fragmentia/circuit.hpp"
#include "fragmentia/rng.hpp"

namespace fragmentia {

struct CensusResult {
    uint64_t total = 0;             // configurations examined (weighted)
    uint64_t walls = 0;
    uint64_t interference_free = 0; // walls whose internal subspaces factor per site
    uint64_t interfering = 0;
};

// Exhaustive symplectic-level counts of wall configurations.  The 1-wall
// census runs over all CZ-class end pairs; the 2-wall censuses fix the middle
// gate class and quotient the end gates by their outer-leg dressing, which
// leaves wallness invariant.
CensusResult census_1wall(int first_parity = 0);
CensusResult census_2wall_swap(int first_parity = 0);
CensusResult census_2wall_fswap(int first_parity = 0);

struct Rational {
    long long num = 0;
    long long den = 1;
    double value() const { return double(num) / double(den); }
};

// Verified against the exhaustive censuses on first call: the census wall
// fraction must equal 1/9 exactly, or these throw.
Rational exact_1wall_probability(); // (1/9)(9/19)^2 = 9/361
Rational exact_2wall_probability(); // (1/9)(10/19)(9/19)^2 = 90/6859

// Equivalence-class counts of consistent CZ-FSWAP-CZ dressings:
// (interference-free, interfering).  Asserts the census split is exactly
// 5:4 out of the 9 consistent units and returns {5, 4}.
std::pair<int, int> enumerate_fswap_2walls();

struct WallCensusRow {
    int k = 0;
    uint64_t samples = 0;
    uint64_t hits = 0;
    double estimate = 0.0;
    double stderr_ = 0.0;
    double exact = 0.0; // NaN where no closed form is implemented (k > 2)
    double sigma_deviation = 0.0;
};

// Monte Carlo estimate of P(k-wall) for k = 1..k_max under the uniform
// non-product gate measure, one independent substream per row.
std::vector<WallCensusRow> montecarlo_wall_prob(int k_max, uint64_t samples, uint64_t seed);

std::string wall_census_csv(const std::vector<WallCensusRow> &rows);

} // namespace fragmentia
