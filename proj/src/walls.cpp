#include "fragmentia/walls.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <json.hpp>
#include <set>
#include <stdexcept>

namespace fragmentia {

namespace {

std::vector<int> central_sites(int k) {
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i + 1;
    return s;
}

bool supported_only_on(const BitVec &v, int lo_site, int hi_site) {
    for (std::size_t b = 0; b < v.size(); ++b)
        if (v.get(b)) {
            int site = int(b / 2);
            if (site < lo_site || site > hi_site) return false;
        }
    return true;
}

GF2Subspace boundary_closure(const SymplecticMatrix &period, int site) {
    std::size_t dim = period.dim();
    return closure(period, GF2Subspace::span(dim, {BitVec::unit(dim, 2 * site),
                                                   BitVec::unit(dim, 2 * site + 1)}));
}

} // namespace

bool is_wall_symp(const SymplecticMatrix &period, Side side) {
    int sites = int(period.dim() / 2);
    if (sites < 2) throw std::invalid_argument("need at least 2 sites");
    int b = side == Side::Left ? 0 : sites - 1;
    int opposite = sites - 1 - b;
    GF2Subspace v = boundary_closure(period, b);
    return v.project_to_sites({opposite}).dim() == 0;
}

bool is_wall(const ReducedCircuit &rc, Side side) { return is_wall_symp(rc.symp, side); }

bool two_sided_check(const ReducedCircuit &rc) {
    return is_wall(rc, Side::Left) == is_wall(rc, Side::Right);
}

std::pair<GF2Subspace, GF2Subspace> internal_subspaces(const ReducedCircuit &rc) {
    auto central = central_sites(rc.k);
    GF2Subspace g_left = boundary_closure(rc.symp, 0).project_to_sites(central);
    GF2Subspace g_right =
        boundary_closure(rc.symp, rc.num_sites() - 1).project_to_sites(central);
    for (const auto &u : g_left.basis())
        for (const auto &v : g_right.basis())
            if (symplectic_product(u, v))
                throw std::logic_error("internal subspaces are not J-orthogonal");
    return {std::move(g_left), std::move(g_right)};
}

std::vector<ConservedCharge> conserved_charges(const ReducedCircuit &rc) {
    auto [g_left, g_right] = internal_subspaces(rc);
    GF2Subspace common = g_left.intersect(g_right);

    constexpr uint64_t orbit_cap = uint64_t(1) << 12;
    std::vector<ConservedCharge> out;
    std::set<std::vector<uint64_t>> seen;
    int sites = rc.num_sites();
    for (const auto &v : common.basis()) {
        if (seen.count(v.words())) continue;
        PauliString start = PauliString::hermitian(sites, v);
        ConservedCharge c;
        PauliString cur = start;
        bool escaped = false;
        uint64_t t = 0;
        do {
            if (!supported_only_on(cur.bits(), 1, sites - 2)) {
                escaped = true;
                break;
            }
            seen.insert(cur.bits().words());
            c.orbit.push_back(cur);
            cur = rc.tableau.conjugate(cur);
            if (++t > orbit_cap) throw std::logic_error("conserved charge orbit exceeds cap");
        } while (cur.bits() != start.bits());
        if (escaped) continue;
        c.tau = t;
        c.theta = cur == start ? 0.0 : std::acos(-1.0);
        out.push_back(std::move(c));
    }
    return out;
}

bool is_irreducible(const ReducedCircuit &rc) {
    std::vector<SymplecticMatrix> gates;
    for (const auto &g : rc.gates) gates.push_back(g.symp);
    return is_irreducible_wall_symp(gates, rc.first_parity);
}

bool is_irreducible_wall_symp(const std::vector<SymplecticMatrix> &gates4, int first_parity) {
    int k = int(gates4.size()) - 1;
    if (!is_wall_symp(staircase_symplectic(gates4, first_parity), Side::Left)) return false;
    for (int kk = 0; kk < k; ++kk) {
        for (int start = 0; start + kk <= k; ++start) {
            std::vector<SymplecticMatrix> sub(gates4.begin() + start,
                                              gates4.begin() + start + kk + 1);
            if (is_wall_symp(staircase_symplectic(sub, (first_parity + start) & 1), Side::Left))
                return false;
        }
    }
    return true;
}

bool factors_per_site(const GF2Subspace &g, const std::vector<int> &sites) {
    std::size_t total = 0;
    for (int s : sites) {
        GF2Subspace slice = GF2Subspace::span(
            g.ambient(), {BitVec::unit(g.ambient(), 2 * s), BitVec::unit(g.ambient(), 2 * s + 1)});
        total += g.intersect(slice).dim();
    }
    return total == g.dim();
}

namespace {

nlohmann::json subspace_to_json(const GF2Subspace &g, int sites) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &r : g.basis()) rows.push_back(PauliString::hermitian(sites, r).str());
    return rows;
}

} // namespace

std::string wall_report_to_json(const WallReport &r) {
    int sites = r.k + 2;
    nlohmann::json j;
    j["pos"] = r.position;
    j["k"] = r.k;
    j["left_wall"] = r.is_left_wall;
    j["right_wall"] = r.is_right_wall;
    j["irreducible"] = r.irreducible;
    j["interfering"] = r.interfering;
    j["unperturbed"] = r.unperturbed;
    j["g_left"] = subspace_to_json(r.g_left, sites);
    j["g_right"] = subspace_to_json(r.g_right, sites);
    j["charges"] = nlohmann::json::array();
    for (const auto &c : r.charges) {
        nlohmann::json jc;
        jc["tau"] = c.tau;
        jc["theta"] = c.theta;
        jc["orbit"] = nlohmann::json::array();
        for (const auto &p : c.orbit) jc["orbit"].push_back(p.str());
        j["charges"].push_back(jc);
    }
    return j.dump();
}

std::vector<WallReport> scan_circuit(const FloquetCircuit &c, int k_max) {
    std::vector<WallReport> out;
    for (int k = 1; k <= k_max; ++k) {
        for (int start = 0; start + k + 2 <= c.n; ++start) {
            ReducedCircuit rc = reduce_staircase(c, start, k);
            if (!is_wall(rc, Side::Left)) continue;
            if (!is_irreducible(rc)) continue;
            WallReport r;
            r.position = start + 1;
            r.k = k;
            r.is_left_wall = true;
            r.is_right_wall = is_wall(rc, Side::Right);
            r.irreducible = true;
            std::tie(r.g_left, r.g_right) = internal_subspaces(rc);
            auto central = central_sites(k);
            r.interfering =
                !factors_per_site(r.g_left, central) || !factors_per_site(r.g_right, central);
            r.charges = conserved_charges(rc);
            r.unperturbed = true;
            for (int s = start + 1; s <= start + k; ++s)
                if (c.mask[s]) r.unperturbed = false;
            out.push_back(std::move(r));
        }
    }
    return out;
}

FragmentDecomposition fragment_decomposition(const FloquetCircuit &c) {
    SymplecticMatrix m = symplectic_image(c);
    std::size_t dim = m.dim();
    FragmentDecomposition fd;

    for (int i = 0; i < c.n; ++i) {
        GF2Subspace v = boundary_closure(m, i);
        fd.closure_dims.push_back(int(v.dim()));
        int lo = c.n, hi = -1;
        for (const auto &row : v.basis())
            for (std::size_t b = 0; b < dim; ++b)
                if (row.get(b)) {
                    lo = std::min(lo, int(b / 2));
                    hi = std::max(hi, int(b / 2));
                }
        fd.reaches.emplace_back(lo, hi);

        BitVec xv = BitVec::unit(dim, 2 * i);
        BitVec zv = BitVec::unit(dim, 2 * i + 1);
        for (const BitVec &pv : {xv, zv, xv ^ zv})
            if (m.apply(pv) == pv) {
                fd.wall_sites.push_back(i);
                break;
            }
    }

    // Central sites of unperturbed irreducible walls.  Any such site's own
    // closure leaks through the wall (X on a wall-interior site spreads both
    // ways), so those reaches are skipped, and two reach intervals whose
    // overlap consists only of wall-interior sites stay separate fragments.
    std::vector<bool> interior(c.n, false);
    for (const auto &r : scan_circuit(c, std::min(3, c.n - 2)))
        if (r.unperturbed)
            for (int s = r.position; s < r.position + r.k; ++s) interior[s] = true;

    std::vector<std::pair<int, int>> iv;
    for (int i = 0; i < c.n; ++i)
        if (!interior[i]) iv.push_back(fd.reaches[i]);
    std::sort(iv.begin(), iv.end());
    for (const auto &next : iv) {
        if (!fd.fragments.empty()) {
            Fragment &cur = fd.fragments.back();
            if (next.first <= cur.hi) {
                bool shared_non_interior = false;
                for (int s = next.first; s <= std::min(cur.hi, next.second); ++s)
                    if (!interior[s]) shared_non_interior = true;
                if (shared_non_interior) {
                    cur.hi = std::max(cur.hi, next.second);
                    continue;
                }
            }
        }
        fd.fragments.push_back({next.first, next.second});
    }
    // Adjacent walls can leave a site uncovered; give it a fragment of its
    // own so the decomposition tiles the chain.
    std::vector<bool> covered(c.n, false);
    for (const auto &f : fd.fragments)
        for (int s = f.lo; s <= f.hi; ++s) covered[s] = true;
    for (int i = 0; i < c.n; ++i)
        if (!covered[i]) fd.fragments.push_back({i, i});
    std::sort(fd.fragments.begin(), fd.fragments.end(),
              [](const Fragment &a, const Fragment &b) { return a.lo < b.lo; });
    return fd;
}

double exact_p1wall() { return (1.0 / 9.0) * (9.0 / 19.0) * (9.0 / 19.0); }

double exact_p2wall() { return (1.0 / 9.0) * (10.0 / 19.0) * (9.0 / 19.0) * (9.0 / 19.0); }

double stopping_probability(double p, double p1, double p2) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0,1]");
    return p1 * (1.0 - p) + p2 * (1.0 - p) * (1.0 - p);
}

double localisation_length(double p, double p1, double p2) {
    double s = stopping_probability(p, p1, p2);
    if (s <= 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 / std::abs(std::log1p(-s));
}

std::pair<double, double> kwall_bounds(int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    double edge = (9.0 / 19.0) * (9.0 / 19.0);
    double lower = edge * (1.0 / 9.0) * std::pow(6.0 / 19.0, k - 1);
    double upper = edge * std::pow(10.0 / 19.0, k - 1);
    return {lower, upper};
}

} // namespace fragmentia
