#include "fragmentia/circuit.hpp"

#include <json.hpp>
#include <stdexcept>

namespace fragmentia {

const TwoQubitClifford &FloquetCircuit::bond_gate(int site) const {
    const auto &layer = site % 2 == 0 ? even_layer : odd_layer;
    for (const auto &g : layer)
        if (g.site == site) return g.gate;
    throw std::out_of_range("no gate on requested bond");
}

TwoQubitClifford &FloquetCircuit::bond_gate(int site) {
    auto &layer = site % 2 == 0 ? even_layer : odd_layer;
    for (auto &g : layer)
        if (g.site == site) return g.gate;
    throw std::out_of_range("no gate on requested bond");
}

FloquetCircuit build_floquet(int n, double p, uint64_t seed) {
    Rng rng = make_rng(seed);
    FloquetCircuit c = build_floquet(n, p, rng);
    c.seed = seed;
    return c;
}

FloquetCircuit build_floquet(int n, double p, Rng &rng) {
    if (n < 2) throw std::invalid_argument("need at least 2 qubits");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0,1]");
    FloquetCircuit c;
    c.n = n;
    c.p = p;

    // Draw order is part of the determinism contract: even gates left to
    // right, even-layer edge Cliffords, odd gates, odd-layer edges, then the
    // mask and rotations site by site.
    for (int i = 0; i + 1 < n; i += 2) c.even_layer.push_back({i, sample_nonproduct(rng)});
    if (n % 2 == 1) c.edge_gates.push_back({n - 1, 0, sample_c1(rng)});
    for (int i = 1; i + 1 < n; i += 2) c.odd_layer.push_back({i, sample_nonproduct(rng)});
    c.edge_gates.push_back({0, 1, sample_c1(rng)});
    if (n % 2 == 0) c.edge_gates.push_back({n - 1, 1, sample_c1(rng)});

    c.mask.assign(n, false);
    c.rotations.assign(n, Quaternion{});
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        if (p >= 1.0)
            c.mask[i] = true;
        else if (p > 0.0)
            c.mask[i] = u(rng) < p;
        if (c.mask[i]) c.rotations[i] = haar_su2(rng);
    }
    return c;
}

CliffordTableau CliffordTableau::identity(int n) {
    CliffordTableau t;
    t.n = n;
    for (int i = 0; i < n; ++i) {
        t.images.push_back(PauliString::single(n, i, 'X'));
        t.images.push_back(PauliString::single(n, i, 'Z'));
    }
    return t;
}

void CliffordTableau::apply_gate(const TwoQubitClifford &g, int site) {
    for (auto &img : images) img = conjugate_by_images(g.images, 2, site, img);
}

void CliffordTableau::apply_gate(const SingleQubitClifford &g, int site) {
    for (auto &img : images) img = conjugate_by_images(g.images, 1, site, img);
}

PauliString CliffordTableau::conjugate(const PauliString &p) const {
    if (p.num_qubits() != n) throw std::invalid_argument("qubit count mismatch");
    PauliString out(n, BitVec(2 * std::size_t(n)), p.phase_exp());
    for (int i = 0; i < n; ++i)
        if (p.x(i)) out = out * images[2 * i];
    for (int i = 0; i < n; ++i)
        if (p.z(i)) out = out * images[2 * i + 1];
    return out;
}

SymplecticMatrix CliffordTableau::symplectic() const {
    SymplecticMatrix m(2 * std::size_t(n));
    for (std::size_t j = 0; j < images.size(); ++j) m.set_col(j, images[j].bits());
    return m;
}

CliffordTableau clifford_tableau(const FloquetCircuit &c) {
    CliffordTableau t = CliffordTableau::identity(c.n);
    for (const auto &g : c.even_layer) t.apply_gate(g.gate, g.site);
    for (const auto &e : c.edge_gates)
        if (e.layer == 0) t.apply_gate(e.gate, e.site);
    for (const auto &g : c.odd_layer) t.apply_gate(g.gate, g.site);
    for (const auto &e : c.edge_gates)
        if (e.layer == 1) t.apply_gate(e.gate, e.site);
    return t;
}

SymplecticMatrix symplectic_image(const FloquetCircuit &c) { return clifford_tableau(c).symplectic(); }

ReducedCircuit make_staircase(std::vector<TwoQubitClifford> gates, int first_parity) {
    ReducedCircuit rc;
    rc.k = int(gates.size()) - 1;
    rc.first_parity = first_parity & 1;
    rc.gates = std::move(gates);
    rc.tableau = CliffordTableau::identity(rc.num_sites());
    for (int pass = 0; pass < 2; ++pass)
        for (int j = 0; j < int(rc.gates.size()); ++j)
            if ((j & 1) == ((rc.first_parity + pass) & 1)) rc.tableau.apply_gate(rc.gates[j], j);
    rc.symp = rc.tableau.symplectic();
    return rc;
}

ReducedCircuit reduce_staircase(const FloquetCircuit &c, int start_site, int k) {
    if (k < 0 || start_site < 0 || start_site + k + 2 > c.n)
        throw std::out_of_range("staircase window out of range");
    std::vector<TwoQubitClifford> gates;
    for (int j = 0; j <= k; ++j) gates.push_back(c.bond_gate(start_site + j));
    // Bond parity relative to the brickwork: even bonds run first.
    return make_staircase(std::move(gates), start_site % 2);
}

SymplecticMatrix staircase_symplectic(const std::vector<SymplecticMatrix> &gates4, int first_parity) {
    int sites = int(gates4.size()) + 1;
    std::size_t dim = 2 * std::size_t(sites);
    SymplecticMatrix m = SymplecticMatrix::identity(dim);
    for (int pass = 0; pass < 2; ++pass) {
        for (int j = 0; j < int(gates4.size()); ++j) {
            if ((j & 1) != ((first_parity + pass) & 1)) continue;
            // Embed the 4x4 gate at bit offset 2j and left-multiply.
            SymplecticMatrix out(dim);
            for (std::size_t col = 0; col < dim; ++col) {
                BitVec v = m.col(col);
                BitVec res(dim);
                for (std::size_t b = 0; b < dim; ++b) {
                    if (!v.get(b)) continue;
                    if (b >= 2 * std::size_t(j) && b < 2 * std::size_t(j) + 4) {
                        const BitVec &gc = gates4[j].col(b - 2 * j);
                        for (std::size_t i = 0; i < 4; ++i)
                            if (gc.get(i)) res.flip(2 * j + i);
                    } else {
                        res.flip(b);
                    }
                }
                out.set_col(col, std::move(res));
            }
            m = std::move(out);
        }
    }
    return m;
}

namespace {

nlohmann::json gate_to_json(const TwoQubitClifford &g) {
    return {{"class", gate_class_name(g.cls)},
            {"dressing", {g.dressing[0], g.dressing[1], g.dressing[2], g.dressing[3]}}};
}

TwoQubitClifford gate_from_json(const nlohmann::json &j) {
    std::string cls = j.at("class");
    GateClass c = cls == "Identity" ? GateClass::Identity
                  : cls == "CZ"     ? GateClass::CZ
                  : cls == "SWAP"   ? GateClass::SWAP
                  : cls == "FSWAP"  ? GateClass::FSWAP
                                    : throw std::invalid_argument("bad gate class: " + cls);
    auto d = j.at("dressing");
    return make_gate(c, {d.at(0).get<int>(), d.at(1).get<int>(), d.at(2).get<int>(), d.at(3).get<int>()});
}

} // namespace

std::string circuit_to_json(const FloquetCircuit &c) {
    nlohmann::json j;
    j["n"] = c.n;
    j["p"] = c.p;
    j["seed"] = c.seed;
    j["gates"] = nlohmann::json::array();
    for (const auto &layer : {&c.even_layer, &c.odd_layer})
        for (const auto &g : *layer) {
            auto jg = gate_to_json(g.gate);
            jg["site"] = g.site;
            j["gates"].push_back(jg);
        }
    j["edges"] = nlohmann::json::array();
    for (const auto &e : c.edge_gates)
        j["edges"].push_back({{"site", e.site}, {"layer", e.layer}, {"c1", e.gate.index}});
    j["mask"] = c.mask;
    j["quaternions"] = nlohmann::json::array();
    for (const auto &q : c.rotations) j["quaternions"].push_back({q.w, q.x, q.y, q.z});
    return j.dump();
}

FloquetCircuit circuit_from_json(const std::string &json_text) {
    auto j = nlohmann::json::parse(json_text);
    FloquetCircuit c;
    c.n = j.at("n");
    c.p = j.at("p");
    c.seed = j.at("seed");
    for (const auto &jg : j.at("gates")) {
        GateInstance gi{jg.at("site").get<int>(), gate_from_json(jg)};
        (gi.site % 2 == 0 ? c.even_layer : c.odd_layer).push_back(std::move(gi));
    }
    for (const auto &je : j.at("edges"))
        c.edge_gates.push_back(
            {je.at("site").get<int>(), je.at("layer").get<int>(), c1_table()[je.at("c1").get<int>()]});
    c.mask = j.at("mask").get<std::vector<bool>>();
    for (const auto &jq : j.at("quaternions"))
        c.rotations.push_back({jq.at(0).get<double>(), jq.at(1).get<double>(), jq.at(2).get<double>(),
                               jq.at(3).get<double>()});
    return c;
}

} // namespace fragmentia
