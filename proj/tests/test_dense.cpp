#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fragmentia/dense.hpp"
#include "fragmentia/stabilizer.hpp"
#include "oracle.hpp"

using namespace fragmentia;

TEST_CASE("su2 matrices are special unitary") {
    Rng rng = make_rng(3);
    for (int i = 0; i < 50; ++i) {
        Eigen::Matrix2cd u = su2_matrix(haar_su2(rng));
        CHECK((u * u.adjoint() - Eigen::Matrix2cd::Identity()).norm() < 1e-12);
        CHECK(std::abs(u.determinant() - 1.0) < 1e-12);
    }
}

TEST_CASE("build_unitary") {
    FloquetCircuit c = build_floquet(4, 0.0, 11);
    for (auto *layer : {&c.even_layer, &c.odd_layer})
        for (auto &g : *layer) g.gate = make_gate(GateClass::Identity);
    for (auto &e : c.edge_gates) e.gate = c1_table()[0];
    DenseUnitary id = build_unitary(c);
    CHECK((id.m - Eigen::MatrixXcd::Identity(16, 16)).norm() < 1e-12);

    FloquetCircuit r = build_floquet(5, 0.6, 12);
    DenseUnitary u = build_unitary(r);
    CHECK((u.m * u.m.adjoint() - Eigen::MatrixXcd::Identity(32, 32)).norm() < 1e-9);

    FloquetCircuit big = build_floquet(13, 0.0, 1);
    CHECK_THROWS_AS(build_unitary(big), ResourceGuardError);
}

TEST_CASE("state evolution preserves the norm") {
    FloquetCircuit c = build_floquet(8, 0.8, 21);
    StateVector s = StateVector::zero(8);
    for (int t = 0; t < 1000; ++t) s.apply_period(c);
    CHECK(std::abs(s.norm() - 1.0) < 1e-9);
}

TEST_CASE("vn entropy basics") {
    StateVector prod = StateVector::zero(3);
    CHECK(vn_entropy(prod, 1) == doctest::Approx(0.0).epsilon(1e-12));
    StateVector bell = StateVector::zero(2);
    bell.amps.setZero();
    bell.amps(0) = 1.0 / std::sqrt(2.0);
    bell.amps(3) = 1.0 / std::sqrt(2.0);
    CHECK(vn_entropy(bell, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(vn_entropy(bell, 0), std::invalid_argument);
}

TEST_CASE("p=0 dense entropy equals stabilizer entropy") {
    for (uint64_t seed = 0; seed < 100; ++seed) {
        int n = 4 + int(seed % 5); // up to 8
        FloquetCircuit c = build_floquet(n, 0.0, seed);
        StabilizerTableau tab = StabilizerTableau::init_zero(n);
        StateVector psi = StateVector::zero(n);
        for (int t = 1; t <= 10; ++t) {
            evolve(tab, c);
            psi.apply_period(c);
            double sd = vn_entropy(psi, n / 2);
            int ss = tab.entropy(n / 2);
            CHECK(std::abs(sd - ss) < 1e-9);
        }
    }
}

TEST_CASE("rotation autocorrelator") {
    Rng rng = make_rng(10);
    const uint64_t N = 400000;
    double v = rotation_autocorrelator(N, rng);
    // var of |tr|^2/4 per sample is bounded by 1; generous 3-sigma band
    CHECK(std::abs(v - 1.0 / 3.0) < 3.0 * std::sqrt(0.1 / double(N)));
    // fixed rotations: identity gives 1; a pi x-rotation flips Z, still 1
    Eigen::Matrix2cd z;
    z << 1, 0, 0, -1;
    for (Quaternion q : {Quaternion{1, 0, 0, 0}, Quaternion{0, 1, 0, 0}}) {
        Eigen::Matrix2cd u = su2_matrix(q);
        CHECK(std::norm((u * z * u.adjoint() * z).trace()) / 4.0 == doctest::Approx(1.0));
    }
    // a pi/2 x-rotation maps Z to Y: correlator 0
    double inv = std::sqrt(0.5);
    Eigen::Matrix2cd u = su2_matrix({inv, inv, 0, 0});
    CHECK(std::norm((u * z * u.adjoint() * z).trace()) / 4.0 == doctest::Approx(0.0));
}

TEST_CASE("sff basics") {
    // identity ensemble: K(t) = D^2 for all t
    DenseUnitary id;
    id.n = 3;
    id.m = Eigen::MatrixXcd::Identity(8, 8);
    SFFTrace tr = sff({id}, 10);
    for (double k : tr.K) CHECK(k == doctest::Approx(64.0).epsilon(1e-9));
    for (double dk : tr.dK) CHECK(dk == doctest::Approx(0.0).epsilon(1e-6));

    // random instances: K(0) = D^2 exactly, spectral/power check passes
    std::vector<DenseUnitary> ens;
    for (uint64_t seed = 0; seed < 5; ++seed) ens.push_back(build_unitary(build_floquet(4, 1.0, seed)));
    SFFTrace tr2 = sff(ens, 20);
    CHECK(tr2.K[0] == 256.0);
    CHECK(tr2.D == 16);

    DenseUnitary bad;
    bad.n = 1;
    bad.m = Eigen::MatrixXcd::Identity(2, 2) * 2.0;
    CHECK_THROWS_AS(sff({bad}, 3), std::invalid_argument);
}

TEST_CASE("cue reference") {
    auto [k, dk] = cue_reference(4, 10);
    CHECK(k[0] == 16.0);
    CHECK(k[2] == 2.0);
    CHECK(k[4] == 4.0);
    CHECK(k[9] == 4.0);
    CHECK(dk[1] == 1.0);
    CHECK(dk[2] == doctest::Approx(std::sqrt(4.0 + 4.0 - 4.0)));   // t=D/2: sqrt(t^2-2t+D)
    CHECK(dk[3] == doctest::Approx(std::sqrt(9.0 - 6.0 + 4.0)));
    for (int t = 4; t <= 10; ++t) CHECK(dk[t] == doctest::Approx(std::sqrt(12.0)));
    CHECK_THROWS_AS(cue_reference(1, 5), std::invalid_argument);
}

TEST_CASE("fragmentation ansatz and smearing") {
    CHECK(fragmentation_ansatz(2.0) == 12.0);
    CHECK(fragmentation_ansatz(0.0) == 0.0);

    std::vector<double> constant(50, 7.0);
    Rng rng = make_rng(2);
    auto sm0 = gaussian_smear(constant, 0, rng);
    for (double v : sm0) CHECK(v == doctest::Approx(7.0).epsilon(1e-12));
    auto sm5 = gaussian_smear(constant, 5, rng);
    for (double v : sm5) CHECK(v == doctest::Approx(7.0).epsilon(1e-12)); // zero window spread

    // mean preservation on a noisy trace: average smeared value close to raw mean
    std::vector<double> noisy(2000);
    std::normal_distribution<double> g(100.0, 5.0);
    for (auto &v : noisy) v = g(rng);
    auto sm = gaussian_smear(noisy, 10, rng);
    double m_raw = 0, m_sm = 0;
    for (std::size_t i = 0; i < noisy.size(); ++i) {
        m_raw += noisy[i];
        m_sm += sm[i];
    }
    CHECK(m_sm / noisy.size() == doctest::Approx(m_raw / noisy.size()).epsilon(0.01));
    CHECK_THROWS_AS(gaussian_smear(constant, -1, rng), std::invalid_argument);
}

TEST_CASE("otoc product test on 2-qubit gates") {
    auto run = [](const TwoQubitClifford &g) {
        DenseUnitary u;
        u.n = 2;
        u.m = gate_matrix(g);
        return otoc_product_test(u, 1);
    };
    auto id = run(make_gate(GateClass::Identity, {5, 9, 17, 3}));
    CHECK(id.is_product);
    CHECK(id.defect < 1e-9);
    int nonzero = 0;
    for (double s : id.singular_values)
        if (s > 1e-9) ++nonzero;
    CHECK(nonzero == 1);

    auto cz = run(make_gate(GateClass::CZ));
    CHECK_FALSE(cz.is_product);
    REQUIRE(cz.singular_values.size() == 4);
    CHECK(cz.singular_values[0] == doctest::Approx(std::sqrt(2.0)));
    CHECK(cz.singular_values[1] == doctest::Approx(std::sqrt(2.0)));
    CHECK(cz.singular_values[2] == doctest::Approx(0.0).epsilon(1e-9));

    auto sw = run(make_gate(GateClass::SWAP));
    for (double s : sw.singular_values) CHECK(s == doctest::Approx(1.0));

    // 0-wall (product) iff Identity class, over random dressings
    Rng rng = make_rng(13);
    std::uniform_int_distribution<int> d(0, 23);
    for (int trial = 0; trial < 100; ++trial) {
        GateClass cls = GateClass(trial % 4);
        auto r = run(make_gate(cls, {d(rng), d(rng), d(rng), d(rng)}));
        CHECK(r.is_product == (cls == GateClass::Identity));
    }
}

TEST_CASE("power-law fit") {
    std::vector<int> ts;
    std::vector<double> ks;
    for (int t = 2; t <= 40; ++t) {
        ts.push_back(t);
        ks.push_back(3.0 * std::pow(double(t), 1.7));
    }
    CHECK(fit_power_law(ts, ks) == doctest::Approx(1.7).epsilon(1e-9));
    CHECK_THROWS_AS(fit_power_law({1}, {2.0}), std::invalid_argument);
}
