#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fragmentia/circuit.hpp"
#include "fragmentia/gf2.hpp"

namespace fragmentia {

enum class Side { Left, Right };

// Wall decision by invariant-subspace closure from the boundary site: exact,
// since the closure covers all injection times and signal superpositions.
bool is_wall_symp(const SymplecticMatrix &period, Side side);
bool is_wall(const ReducedCircuit &rc, Side side = Side::Left);

// Left walls must also be right walls; exercised as a property test.
bool two_sided_check(const ReducedCircuit &rc);

// (G_left, G_right) on the central sites.  Verifies J-orthogonality of the
// two subspaces and throws on violation.
std::pair<GF2Subspace, GF2Subspace> internal_subspaces(const ReducedCircuit &rc);

struct ConservedCharge {
    uint64_t tau = 0;
    double theta = 0.0; // 0 or pi
    std::vector<PauliString> orbit; // on the k+2 window sites, central support only
};

std::vector<ConservedCharge> conserved_charges(const ReducedCircuit &rc);

bool is_irreducible(const ReducedCircuit &rc);

// Wall with no proper sub-window wall, straight from 4x4 gate images.
bool is_irreducible_wall_symp(const std::vector<SymplecticMatrix> &gates4, int first_parity);

// True iff the subspace decomposes as a direct sum of its per-site slices
// over the given sites.
bool factors_per_site(const GF2Subspace &g, const std::vector<int> &sites);

struct WallReport {
    int position = 0; // leftmost central site (global index)
    int k = 0;
    bool is_left_wall = false;
    bool is_right_wall = false;
    bool irreducible = false;
    GF2Subspace g_left, g_right; // on the window's 2(k+2) bits
    std::vector<ConservedCharge> charges;
    bool interfering = false;
    bool unperturbed = false;
};

std::string wall_report_to_json(const WallReport &r);

// Slides staircase windows of widths 1..k_max over the chain and reports
// every irreducible wall.
std::vector<WallReport> scan_circuit(const FloquetCircuit &c, int k_max);

struct Fragment {
    int lo = 0, hi = 0; // inclusive site interval
};

struct FragmentDecomposition {
    std::vector<Fragment> fragments;
    std::vector<int> wall_sites;                 // sites carrying a conserved single-site Pauli
    std::vector<std::pair<int, int>> reaches;    // per-site closure support interval
    std::vector<int> closure_dims;               // per-site closure dimension
};

FragmentDecomposition fragment_decomposition(const FloquetCircuit &c);

// Exact wall probabilities for the non-product Clifford measure.
double exact_p1wall();
double exact_p2wall();

// s(p) = P(1-wall)(1-p) + P(2-wall)(1-p)^2.
double stopping_probability(double p, double p1 = exact_p1wall(), double p2 = exact_p2wall());

// mu(p) = 1/|ln(1 - s(p))|; +inf when s vanishes (p -> 1).
double localisation_length(double p, double p1 = exact_p1wall(), double p2 = exact_p2wall());

// Exponential brackets on P(k-wall): interference-free lower bound and
// class-sequence upper bound.
std::pair<double, double> kwall_bounds(int k);

} // namespace fragmentia
