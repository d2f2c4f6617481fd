#include "fragmentia/dense.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <complex>

namespace fragmentia {

using namespace std::complex_literals;

Eigen::Matrix2cd su2_matrix(const Quaternion &q) {
    // q = w + x i + y j + z k  ->  w*I - i(x sx + y sy + z sz)
    Eigen::Matrix2cd u;
    u << q.w - 1i * q.z, -q.y - 1i * q.x, q.y - 1i * q.x, q.w + 1i * q.z;
    return u;
}

Eigen::Matrix2cd c1_matrix(const SingleQubitClifford &g) {
    Eigen::Matrix2cd u;
    u << g.matrix[0], g.matrix[1], g.matrix[2], g.matrix[3];
    return u;
}

namespace {

Eigen::Matrix4cd rep_matrix(GateClass cls) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
    switch (cls) {
    case GateClass::Identity: break;
    case GateClass::CZ: m(3, 3) = -1.0; break;
    case GateClass::SWAP:
        m.setZero();
        m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
        break;
    case GateClass::FSWAP:
        m.setZero();
        m(0, 0) = m(1, 2) = m(2, 1) = 1.0;
        m(3, 3) = -1.0;
        break;
    }
    return m;
}

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd &a, const Eigen::Matrix2cd &b) {
    Eigen::Matrix4cd m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return m;
}

} // namespace

Eigen::Matrix4cd gate_matrix(const TwoQubitClifford &g) {
    const auto &t = c1_table();
    return kron2(c1_matrix(t[g.dressing[0]]), c1_matrix(t[g.dressing[1]])) * rep_matrix(g.cls) *
           kron2(c1_matrix(t[g.dressing[2]]), c1_matrix(t[g.dressing[3]]));
}

StateVector StateVector::zero(int n) {
    if (n < 1 || n > 16) throw ResourceGuardError("state vector limited to 1..16 qubits");
    StateVector s;
    s.n = n;
    s.amps = Eigen::VectorXcd::Zero(std::int64_t(1) << n);
    s.amps(0) = 1.0;
    return s;
}

void StateVector::apply1(int site, const Eigen::Matrix2cd &u) {
    std::int64_t bit = std::int64_t(1) << (n - 1 - site);
    std::int64_t dim = amps.size();
    for (std::int64_t i = 0; i < dim; ++i) {
        if (i & bit) continue;
        std::complex<double> a0 = amps(i), a1 = amps(i | bit);
        amps(i) = u(0, 0) * a0 + u(0, 1) * a1;
        amps(i | bit) = u(1, 0) * a0 + u(1, 1) * a1;
    }
}

void StateVector::apply2(int site, const Eigen::Matrix4cd &u) {
    std::int64_t hi = std::int64_t(1) << (n - 1 - site);
    std::int64_t lo = std::int64_t(1) << (n - 2 - site);
    std::int64_t dim = amps.size();
    for (std::int64_t i = 0; i < dim; ++i) {
        if (i & (hi | lo)) continue;
        std::int64_t idx[4] = {i, i | lo, i | hi, i | hi | lo};
        std::complex<double> a[4];
        for (int r = 0; r < 4; ++r) a[r] = amps(idx[r]);
        for (int r = 0; r < 4; ++r)
            amps(idx[r]) = u(r, 0) * a[0] + u(r, 1) * a[1] + u(r, 2) * a[2] + u(r, 3) * a[3];
    }
}

void StateVector::apply_period(const FloquetCircuit &c) {
    if (c.n != n) throw std::invalid_argument("qubit count mismatch");
    for (const auto &g : c.even_layer) apply2(g.site, gate_matrix(g.gate));
    for (const auto &e : c.edge_gates)
        if (e.layer == 0) apply1(e.site, c1_matrix(e.gate));
    for (const auto &g : c.odd_layer) apply2(g.site, gate_matrix(g.gate));
    for (const auto &e : c.edge_gates)
        if (e.layer == 1) apply1(e.site, c1_matrix(e.gate));
    for (int s = 0; s < n; ++s)
        if (c.mask[s]) apply1(s, su2_matrix(c.rotations[s]));
}

DenseUnitary build_unitary(const FloquetCircuit &c) {
    if (c.n > 12) throw ResourceGuardError("dense unitary limited to n <= 12");
    std::int64_t dim = std::int64_t(1) << c.n;
    DenseUnitary u;
    u.n = c.n;
    u.m.resize(dim, dim);
    for (std::int64_t j = 0; j < dim; ++j) {
        StateVector s;
        s.n = c.n;
        s.amps = Eigen::VectorXcd::Zero(dim);
        s.amps(j) = 1.0;
        s.apply_period(c);
        u.m.col(j) = s.amps;
    }
    return u;
}

double vn_entropy(const StateVector &s, int cut) {
    if (cut <= 0 || cut >= s.n) throw std::invalid_argument("cut must leave both sides non-empty");
    std::int64_t a = std::int64_t(1) << cut;
    std::int64_t b = std::int64_t(1) << (s.n - cut);
    // Left sites occupy the high bits, so the reshape is row-major by left
    // index already.
    Eigen::MatrixXcd psi(a, b);
    for (std::int64_t i = 0; i < a; ++i)
        for (std::int64_t j = 0; j < b; ++j) psi(i, j) = s.amps(i * b + j);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(psi);
    double ent = 0.0;
    for (double sv : svd.singularValues()) {
        double lam = sv * sv;
        if (lam < 1e-14) continue;
        ent -= lam * std::log2(lam);
    }
    return ent;
}

double rotation_autocorrelator(uint64_t samples, Rng &rng) {
    if (samples == 0) throw std::invalid_argument("need samples >= 1");
    Eigen::Matrix2cd z = Eigen::Matrix2cd::Zero();
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    double acc = 0.0;
    for (uint64_t i = 0; i < samples; ++i) {
        Eigen::Matrix2cd u = su2_matrix(haar_su2(rng));
        std::complex<double> tr = (u * z * u.adjoint() * z).trace();
        acc += std::norm(tr) / 4.0;
    }
    return acc / double(samples);
}

std::vector<double> eigenphases(const DenseUnitary &u) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(u.m, false);
    std::vector<double> phases;
    for (std::complex<double> lam : es.eigenvalues()) {
        if (std::abs(std::abs(lam) - 1.0) > 1e-8)
            throw std::invalid_argument("matrix is not unitary: eigenvalue off the unit circle");
        phases.push_back(std::arg(lam));
    }
    return phases;
}

namespace {

double trace_abs2(const std::vector<double> &phases, int t) {
    std::complex<double> tr = 0.0;
    for (double th : phases) tr += std::polar(1.0, th * t);
    return std::norm(tr);
}

} // namespace

SFFTrace sff_from_phases(const std::vector<std::vector<double>> &phase_sets, int D, int tmax) {
    if (phase_sets.empty()) throw std::invalid_argument("empty ensemble");
    SFFTrace tr;
    tr.ensemble = int(phase_sets.size());
    tr.D = D;
    std::vector<double> m2(tmax + 1, 0.0), m4(tmax + 1, 0.0);
    for (const auto &phases : phase_sets) {
        for (int t = 0; t <= tmax; ++t) {
            double v = t == 0 ? double(D) * double(D) : trace_abs2(phases, t);
            m2[t] += v;
            m4[t] += v * v;
        }
    }
    for (int t = 0; t <= tmax; ++t) {
        double k = m2[t] / tr.ensemble;
        double k4 = m4[t] / tr.ensemble;
        tr.t.push_back(t);
        tr.K.push_back(k);
        tr.dK.push_back(std::sqrt(std::max(0.0, k4 - k * k)));
    }
    return tr;
}

SFFTrace sff(const std::vector<DenseUnitary> &ensemble, int tmax) {
    if (ensemble.empty()) throw std::invalid_argument("empty ensemble");
    std::vector<std::vector<double>> phase_sets;
    for (const auto &u : ensemble) phase_sets.push_back(eigenphases(u));
    // Spectral vs matrix-power cross-check on the first member.
    {
        const auto &u = ensemble.front();
        Rng crng = make_rng(uint64_t(tmax) * 977 + 1);
        std::uniform_int_distribution<int> pick(1, std::max(1, tmax));
        for (int probe = 0; probe < 3; ++probe) {
            int t = pick(crng);
            Eigen::MatrixXcd pw = u.m;
            for (int s = 1; s < t; ++s) pw = pw * u.m;
            double direct = std::norm(pw.trace());
            double spectral = trace_abs2(phase_sets.front(), t);
            double scale = std::max(1.0, std::max(direct, spectral));
            if (std::abs(direct - spectral) / scale > 1e-6)
                throw std::logic_error("spectral/matrix-power SFF mismatch");
        }
    }
    return sff_from_phases(phase_sets, int(ensemble.front().m.rows()), tmax);
}

std::pair<std::vector<double>, std::vector<double>> cue_reference(int D, int tmax) {
    if (D < 2) throw std::invalid_argument("need D >= 2");
    std::vector<double> K, dK;
    for (int t = 0; t <= tmax; ++t) {
        if (t == 0)
            K.push_back(double(D) * double(D));
        else
            K.push_back(t <= D ? double(t) : double(D));
        if (2 * t < D)
            dK.push_back(double(t));
        else if (t < D)
            dK.push_back(std::sqrt(double(t) * t - 2.0 * t + D));
        else
            dK.push_back(std::sqrt(double(D) * D - D));
    }
    return {K, dK};
}

std::vector<double> gaussian_smear(const std::vector<double> &K, int dt, Rng &rng) {
    if (dt < 0) throw std::invalid_argument("need dt >= 0");
    int len = int(K.size());
    std::vector<double> out(len);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int t = 0; t < len; ++t) {
        int lo = std::max(0, t - dt), hi = std::min(len - 1, t + dt);
        int w = hi - lo + 1;
        double mean = 0.0;
        for (int s = lo; s <= hi; ++s) mean += K[s];
        mean /= w;
        double var = 0.0;
        for (int s = lo; s <= hi; ++s) var += (K[s] - mean) * (K[s] - mean);
        double sd = std::sqrt(var / w);
        double acc = 0.0;
        for (int s = lo; s <= hi; ++s) acc += K[s] + sd * gauss(rng);
        out[t] = 0.5 * K[t] + 0.5 * acc / w;
    }
    return out;
}

ProductTestResult otoc_product_test(const DenseUnitary &u, int cut) {
    if (cut <= 0 || cut >= u.n) throw std::invalid_argument("cut must leave both sides non-empty");
    std::int64_t a = std::int64_t(1) << cut;
    std::int64_t b = std::int64_t(1) << (u.n - cut);
    // Reshuffle U_{(i j),(i' j')} -> R_{(i i'),(j j')}, i over the left
    // factor (high bits).
    Eigen::MatrixXcd r(a * a, b * b);
    for (std::int64_t i = 0; i < a; ++i)
        for (std::int64_t ip = 0; ip < a; ++ip)
            for (std::int64_t j = 0; j < b; ++j)
                for (std::int64_t jp = 0; jp < b; ++jp)
                    r(i * a + ip, j * b + jp) = u.m(i * b + j, ip * b + jp);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(r);
    ProductTestResult res;
    double s2 = 0.0, s4 = 0.0;
    for (double sv : svd.singularValues()) {
        res.singular_values.push_back(sv);
        s2 += sv * sv;
        s4 += sv * sv * sv * sv;
    }
    res.defect = s2 * s2 - s4;
    res.is_product = res.defect < 1e-9;
    return res;
}

double fit_power_law(const std::vector<int> &ts, const std::vector<double> &Ks) {
    if (ts.size() != Ks.size() || ts.size() < 2) throw std::invalid_argument("need >= 2 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i] <= 0 || Ks[i] <= 0) continue;
        double x = std::log(double(ts[i])), y = std::log(Ks[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    if (m < 2) throw std::invalid_argument("need >= 2 positive points");
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

} // namespace fragmentia
