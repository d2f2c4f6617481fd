#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fragmentia/circuit.hpp"
#include "fragmentia/rng.hpp"

namespace fragmentia {

// Raised when an operation would exceed the module's size guards; the CLI
// maps it to its own exit code.
struct ResourceGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Eigen::Matrix2cd su2_matrix(const Quaternion &q);
Eigen::Matrix2cd c1_matrix(const SingleQubitClifford &g);
Eigen::Matrix4cd gate_matrix(const TwoQubitClifford &g); // (out0 x out1) REP (in0 x in1)

// Amplitude index convention: qubit s is bit (n-1-s), site 0 most significant.
struct StateVector {
    int n = 0;
    Eigen::VectorXcd amps;

    static StateVector zero(int n); // |0...0>

    void apply1(int site, const Eigen::Matrix2cd &u);
    void apply2(int site, const Eigen::Matrix4cd &u); // sites (site, site+1)
    void apply_period(const FloquetCircuit &c);       // Cliffords first, rotations last

    double norm() const { return amps.norm(); }
};

struct DenseUnitary {
    int n = 0;
    Eigen::MatrixXcd m;
};

DenseUnitary build_unitary(const FloquetCircuit &c); // guard: n <= 12

// Von Neumann entropy in bits across the cut (left side = sites [0, cut)),
// via singular values of the amplitude reshape; eigenvalues < 1e-14 dropped.
double vn_entropy(const StateVector &s, int cut);

// Monte Carlo mean of |Tr[U Z U~ Z]|^2 / 4 over Haar U(2); tends to 1/3.
double rotation_autocorrelator(uint64_t samples, Rng &rng);

// Spectrum {theta_a}; throws if any eigenvalue is off the unit circle by
// more than 1e-8.
std::vector<double> eigenphases(const DenseUnitary &u);

struct SFFTrace {
    std::vector<int> t;
    std::vector<double> K;
    std::vector<double> dK;
    std::vector<double> Ksmear; // filled by gaussian_smear when requested
    int ensemble = 0;
    int D = 0;
};

// K(t) = <|Tr U^t|^2> and dK(t) = sqrt(<|Tr U^t|^4> - K^2) over the
// ensemble, t = 0..tmax, via eigenphases; cross-checked against direct
// matrix powers at 3 ts for the first member.
SFFTrace sff(const std::vector<DenseUnitary> &ensemble, int tmax);

// Same statistics from precomputed eigenphase sets (memory-light path).
SFFTrace sff_from_phases(const std::vector<std::vector<double>> &phase_sets, int D, int tmax);

// Exact CUE curves (K_CUE, dK_CUE) for t = 0..tmax.
std::pair<std::vector<double>, std::vector<double>> cue_reference(int D, int tmax);

inline double fragmentation_ansatz(double t) { return t * t + 4.0 * t; }

// Window-normalized Gaussian smearing:
//   Ks(t) = K(t)/2 + (1/(2 dt + 1)) sum_{t'} N(t') / 2,
// N(t') Gaussian with mean K(t') and sd the spread of the window's K values,
// window clipped at the trace edges.  Mean-preserving; dt = 0 returns K.
std::vector<double> gaussian_smear(const std::vector<double> &K, int dt, Rng &rng);

struct ProductTestResult {
    std::vector<double> singular_values; // operator-Schmidt values across the cut
    bool is_product = false;
    double defect = 0.0; // (sum s^2)^2 - sum s^4
};

// Operator-Schmidt (reshuffled-U) test; cut counts qubits on the left.
ProductTestResult otoc_product_test(const DenseUnitary &u, int cut);

// Least-squares slope of log K vs log t over the given points (t > 0).
double fit_power_law(const std::vector<int> &ts, const std::vector<double> &Ks);

} // namespace fragmentia
