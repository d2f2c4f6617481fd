#include "fragmentia/clifford.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace fragmentia {

namespace {

using C = std::complex<double>;
using Mat2 = std::array<C, 4>; // row-major

Mat2 matmul(const Mat2 &a, const Mat2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

Mat2 dagger(const Mat2 &a) {
    return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

bool approx(const Mat2 &a, const Mat2 &b) {
    for (int i = 0; i < 4; ++i)
        if (std::abs(a[i] - b[i]) > 1e-9) return false;
    return true;
}

const Mat2 kPauliX{C(0), C(1), C(1), C(0)};
const Mat2 kPauliY{C(0), C(0, -1), C(0, 1), C(0)};
const Mat2 kPauliZ{C(1), C(0), C(0), C(-1)};

// Identify U P U^dag as a signed single-qubit Pauli.
PauliString signed_image(const Mat2 &u, const Mat2 &p) {
    Mat2 img = matmul(matmul(u, p), dagger(u));
    struct Cand {
        const Mat2 *m;
        char letter;
    };
    const Cand cands[] = {{&kPauliX, 'X'}, {&kPauliY, 'Y'}, {&kPauliZ, 'Z'}};
    for (const auto &c : cands) {
        for (int sgn : {+1, -1}) {
            Mat2 t = *c.m;
            for (auto &e : t) e *= double(sgn);
            if (approx(img, t)) {
                PauliString out = PauliString::single(1, 0, c.letter);
                if (sgn < 0) out = PauliString(1, out.bits(), out.phase_exp() + 2);
                return out;
            }
        }
    }
    throw std::logic_error("conjugated Pauli is not a signed Pauli");
}

std::vector<SingleQubitClifford> build_c1_table() {
    const double s = 1.0 / std::sqrt(2.0);
    Mat2 h{C(s), C(s), C(s), C(-s)};
    Mat2 sg{C(1), C(0), C(0), C(0, 1)};
    Mat2 id{C(1), C(0), C(0), C(1)};

    auto key_of = [](const std::vector<PauliString> &imgs) {
        return std::array<int, 4>{int(imgs[0].bits().get(0)) * 2 + int(imgs[0].bits().get(1)),
                                  imgs[0].sign(), int(imgs[1].bits().get(0)) * 2 + int(imgs[1].bits().get(1)),
                                  imgs[1].sign()};
    };

    std::vector<SingleQubitClifford> table;
    std::set<std::array<int, 4>> seen;
    std::deque<Mat2> queue{id};
    while (!queue.empty()) {
        Mat2 u = queue.front();
        queue.pop_front();
        std::vector<PauliString> imgs{signed_image(u, kPauliX), signed_image(u, kPauliZ)};
        if (!seen.insert(key_of(imgs)).second) continue;
        SingleQubitClifford g;
        g.index = int(table.size());
        g.images = imgs;
        g.symp = SymplecticMatrix(2);
        g.symp.set_col(0, imgs[0].bits());
        g.symp.set_col(1, imgs[1].bits());
        g.matrix = u;
        table.push_back(std::move(g));
        queue.push_back(matmul(h, u));
        queue.push_back(matmul(sg, u));
    }
    if (table.size() != 24) throw std::logic_error("C1 enumeration did not produce 24 elements");
    return table;
}

// Images of the two-qubit class representatives on generators X0, Z0, X1, Z1.
std::vector<PauliString> rep_images(GateClass cls) {
    auto two = [](const char a[2]) {
        PauliString p = PauliString::single(2, 0, a[0]);
        return p * PauliString::single(2, 1, a[1]);
    };
    switch (cls) {
    case GateClass::Identity: return {two("XI"), two("ZI"), two("IX"), two("IZ")};
    case GateClass::CZ: return {two("XZ"), two("ZI"), two("ZX"), two("IZ")};
    case GateClass::SWAP: return {two("IX"), two("IZ"), two("XI"), two("ZI")};
    case GateClass::FSWAP: return {two("ZX"), two("IZ"), two("XZ"), two("ZI")};
    }
    throw std::logic_error("bad class");
}

int rank2x2(bool a, bool b, bool c, bool d) {
    if (!(a || b || c || d)) return 0;
    return ((a && d) != (b && c)) ? 2 : 1;
}

SymplecticMatrix embed_symp(const SymplecticMatrix &g, std::size_t dim, std::size_t bit_offset) {
    SymplecticMatrix m = SymplecticMatrix::identity(dim);
    for (std::size_t j = 0; j < g.dim(); ++j) {
        BitVec col(dim);
        for (std::size_t i = 0; i < g.dim(); ++i)
            if (g.get(i, j)) col.set(bit_offset + i, true);
        m.set_col(bit_offset + j, std::move(col));
    }
    return m;
}

} // namespace

PauliString embed(const PauliString &local, int n, int site) {
    PauliString out(n);
    BitVec bits(2 * std::size_t(n));
    for (int s = 0; s < local.num_qubits(); ++s) {
        if (local.x(s)) bits.set(2 * (site + s), true);
        if (local.z(s)) bits.set(2 * (site + s) + 1, true);
    }
    return PauliString(n, bits, local.phase_exp());
}

PauliString conjugate_by_images(const std::vector<PauliString> &images, int m, int site,
                                const PauliString &p) {
    int n = p.num_qubits();
    // Strip the gate-site factors, keeping the overall phase.
    BitVec rest = p.bits();
    for (int s = 0; s < m; ++s) {
        rest.set(2 * (site + s), false);
        rest.set(2 * (site + s) + 1, false);
    }
    PauliString out(n, rest, p.phase_exp());
    // Local factor is prod_s X_s^{x_s} times prod_s Z_s^{z_s}; conjugate each
    // generator and multiply the images back in the same order.
    for (int s = 0; s < m; ++s)
        if (p.x(site + s)) out = out * embed(images[2 * s], n, site);
    for (int s = 0; s < m; ++s)
        if (p.z(site + s)) out = out * embed(images[2 * s + 1], n, site);
    return out;
}

const std::vector<SingleQubitClifford> &c1_table() {
    static const std::vector<SingleQubitClifford> table = build_c1_table();
    return table;
}

const SingleQubitClifford &sample_c1(Rng &rng) {
    std::uniform_int_distribution<int> d(0, 23);
    return c1_table()[d(rng)];
}

bool c1_preserves(const SingleQubitClifford &g, char pauli) {
    PauliString p = PauliString::single(1, 0, pauli);
    PauliString img = conjugate(g, p);
    return img.bits() == p.bits();
}

const char *gate_class_name(GateClass c) {
    switch (c) {
    case GateClass::Identity: return "Identity";
    case GateClass::CZ: return "CZ";
    case GateClass::SWAP: return "SWAP";
    case GateClass::FSWAP: return "FSWAP";
    }
    return "?";
}

PauliString conjugate(const SingleQubitClifford &g, const PauliString &p) {
    if (p.num_qubits() != 1) throw std::invalid_argument("support mismatch: expected 1-qubit Pauli");
    return conjugate_by_images(g.images, 1, 0, p);
}

PauliString conjugate(const TwoQubitClifford &g, const PauliString &p) {
    if (p.num_qubits() != 2) throw std::invalid_argument("support mismatch: expected 2-qubit Pauli");
    return conjugate_by_images(g.images, 2, 0, p);
}

TwoQubitClifford make_gate(GateClass cls, const std::array<int, 4> &dressing) {
    const auto &t = c1_table();
    const auto &out0 = t[dressing[0]];
    const auto &out1 = t[dressing[1]];
    const auto &in0 = t[dressing[2]];
    const auto &in1 = t[dressing[3]];
    auto rep = rep_images(cls);

    TwoQubitClifford g;
    g.cls = cls;
    g.dressing = dressing;
    for (int j = 0; j < 4; ++j) {
        PauliString p(2);
        p = j == 0 ? PauliString::single(2, 0, 'X')
            : j == 1 ? PauliString::single(2, 0, 'Z')
            : j == 2 ? PauliString::single(2, 1, 'X')
                     : PauliString::single(2, 1, 'Z');
        p = conjugate_by_images(in0.images, 1, 0, p);
        p = conjugate_by_images(in1.images, 1, 1, p);
        p = conjugate_by_images(rep, 2, 0, p);
        p = conjugate_by_images(out0.images, 1, 0, p);
        p = conjugate_by_images(out1.images, 1, 1, p);
        g.images.push_back(std::move(p));
    }
    g.symp = SymplecticMatrix(4);
    for (int j = 0; j < 4; ++j) g.symp.set_col(j, g.images[j].bits());
    g.cls = classify(g.symp);
    return g;
}

GateClass classify(const SymplecticMatrix &s) {
    if (s.dim() != 4) throw std::invalid_argument("classify expects a 4x4 matrix");
    if (!symplectic_check(s)) throw std::invalid_argument("classify expects a symplectic matrix");
    auto blk = [&](int r, int c) {
        return rank2x2(s.get(2 * r, 2 * c), s.get(2 * r, 2 * c + 1), s.get(2 * r + 1, 2 * c),
                       s.get(2 * r + 1, 2 * c + 1));
    };
    int rA = blk(0, 0), rB = blk(0, 1), rC = blk(1, 0), rD = blk(1, 1);
    if (rB == 0 && rC == 0) return GateClass::Identity;
    if (rA == 0 && rD == 0) return GateClass::SWAP;
    if (rA == 2) return GateClass::CZ;
    if (rA == 1) return GateClass::FSWAP;
    throw std::logic_error("unclassifiable symplectic block pattern");
}

namespace {

std::vector<SymplecticMatrix> build_sp4() {
    std::vector<SymplecticMatrix> gens;
    gens.push_back(make_gate(GateClass::CZ).symp);
    gens.push_back(make_gate(GateClass::SWAP).symp);
    std::set<std::vector<uint64_t>> c1_keys;
    for (const auto &g : c1_table()) {
        if (!c1_keys.insert(g.symp.key()).second) continue;
        gens.push_back(embed_symp(g.symp, 4, 0));
        gens.push_back(embed_symp(g.symp, 4, 2));
    }

    std::vector<SymplecticMatrix> all;
    std::set<std::vector<uint64_t>> seen;
    std::deque<SymplecticMatrix> queue{SymplecticMatrix::identity(4)};
    while (!queue.empty()) {
        SymplecticMatrix m = queue.front();
        queue.pop_front();
        if (!seen.insert(m.key()).second) continue;
        all.push_back(m);
        for (const auto &g : gens) queue.push_back(g * m);
    }
    return all;
}

} // namespace

const std::vector<SymplecticMatrix> &enumerate_sp4() {
    static const std::vector<SymplecticMatrix> all = build_sp4();
    return all;
}

std::array<int, 4> sp4_class_census() {
    std::array<int, 4> counts{0, 0, 0, 0};
    for (const auto &m : enumerate_sp4()) counts[int(classify(m))]++;
    return counts;
}

const std::vector<SymplecticMatrix> &sp4_nonproduct() {
    static const std::vector<SymplecticMatrix> np = [] {
        std::vector<SymplecticMatrix> v;
        for (const auto &m : enumerate_sp4())
            if (classify(m) != GateClass::Identity) v.push_back(m);
        return v;
    }();
    return np;
}

TwoQubitClifford sample_nonproduct(Rng &rng) {
    std::uniform_int_distribution<int> cls_pick(0, 18);
    int r = cls_pick(rng);
    GateClass cls = r < 9 ? GateClass::CZ : (r == 9 ? GateClass::SWAP : GateClass::FSWAP);
    std::uniform_int_distribution<int> d(0, 23);
    std::array<int, 4> dress{d(rng), d(rng), d(rng), d(rng)};
    return make_gate(cls, dress);
}

const SymplecticMatrix &sample_nonproduct_symplectic_rejection(Rng &rng) {
    const auto &np = sp4_nonproduct();
    std::uniform_int_distribution<std::size_t> d(0, np.size() - 1);
    return np[d(rng)];
}

} // namespace fragmentia
