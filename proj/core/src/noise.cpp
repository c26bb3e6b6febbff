#include "qcorr/noise.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace qcorr {

namespace {

using Cx = std::complex<double>;

DensityMatrix kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    DensityMatrix out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

DensityMatrix noise_op_on_a() { return kron2(sigma(3), sigma(0)); }
DensityMatrix noise_op_on_b() { return kron2(sigma(0), sigma(3)); }

double real_checked(Cx z, const char* what) {
    double scale = std::max(1.0, std::abs(z));
    if (std::abs(z.imag()) > 1e-10 * scale)
        throw NumericalConsistencyError(std::string(what) + ": imaginary residue too large");
    return z.real();
}

// [2 R cosh(2iRt) - i rate sinh(2iRt)]/(2R) with R = sqrt(g^2 - rate^2/4)
Cx envelope_core(double g, double rate, double t) {
    Cx r0 = std::sqrt(Cx(g * g - rate * rate / 4.0, 0.0));
    if (std::abs(r0) < 1e-12) {
        // degenerate rate/2 = g: cosh -> 1, sinh(2iRt)/(2R) -> i t
        return Cx(1.0 + rate * t, 0.0);
    }
    Cx arg = 2.0 * Cx(0, 1) * r0 * t;
    return (2.0 * r0 * std::cosh(arg) - Cx(0, 1) * rate * std::sinh(arg)) / (2.0 * r0);
}

}  // namespace

MarkovianResult is_markovian(const NoiseSpec& noise) {
    MarkovianResult r;
    double d = noise.gamma / 2.0 - noise.g_z;
    r.boundary = std::abs(d) < 1e-12;
    r.markovian = d > 0 && !r.boundary;
    return r;
}

Eigen::Matrix<double, 15, 15> adjoint_generator(const DensityMatrix& H) {
    Eigen::Matrix<double, 15, 15> A;
    for (int a = 0; a < 15; ++a) {
        DensityMatrix comm = pauli_tensor(a) * H - H * pauli_tensor(a);
        for (int b = 0; b < 15; ++b) {
            Cx tr = (comm * pauli_tensor(b)).trace();
            A(a, b) = (Cx(0, -0.25) * tr).real();
        }
    }
    return A;
}

QuasiHamiltonian build_quasi_hamiltonian(const HamiltonianSpec& h, const NoiseSpec& noise) {
    if (noise.gamma <= 0) throw std::invalid_argument("noise: gamma must be positive");
    if (noise.xi <= 0) throw std::invalid_argument("noise: xi must be positive");
    DensityMatrix H0 = build_hamiltonian(h);

    QuasiHamiltonian q;
    if (noise.mode == NoiseMode::TwoUncorrelated) {
        q.fluctuator_states = 4;
        q.M = Eigen::MatrixXd::Zero(60, 60);
        const double g1 = noise.gamma, g2 = noise.xi * noise.gamma;
        const int s1v[4] = {+1, +1, -1, -1}, s2v[4] = {+1, -1, +1, -1};
        for (int i = 0; i < 4; ++i) {
            DensityMatrix Hs = H0 + noise.g_z * (double(s1v[i]) * noise_op_on_a() +
                                                 double(s2v[i]) * noise_op_on_b());
            q.M.block<15, 15>(15 * i, 15 * i) =
                adjoint_generator(Hs) - (g1 + g2) * Eigen::Matrix<double, 15, 15>::Identity();
            for (int j = 0; j < 4; ++j) {
                if (s1v[j] == -s1v[i] && s2v[j] == s2v[i])
                    q.M.block<15, 15>(15 * i, 15 * j) += g1 * Eigen::Matrix<double, 15, 15>::Identity();
                if (s1v[j] == s1v[i] && s2v[j] == -s2v[i])
                    q.M.block<15, 15>(15 * i, 15 * j) += g2 * Eigen::Matrix<double, 15, 15>::Identity();
            }
        }
        return q;
    }

    DensityMatrix coupling = noise_op_on_a();
    if (noise.mode == NoiseMode::Correlated) coupling += noise_op_on_b();
    q.fluctuator_states = 2;
    q.M = Eigen::MatrixXd::Zero(30, 30);
    auto I15 = Eigen::Matrix<double, 15, 15>::Identity();
    q.M.block<15, 15>(0, 0) =
        adjoint_generator(H0 + noise.g_z * coupling) - noise.gamma * I15;
    q.M.block<15, 15>(15, 15) =
        adjoint_generator(H0 - noise.g_z * coupling) - noise.gamma * I15;
    q.M.block<15, 15>(0, 15) = noise.gamma * I15;
    q.M.block<15, 15>(15, 0) = noise.gamma * I15;
    return q;
}

std::vector<std::complex<double>> QuasiHamiltonian::hq_spectrum() const {
    Eigen::EigenSolver<Eigen::MatrixXd> es(M, false);
    std::vector<Cx> out(M.rows());
    for (int k = 0; k < M.rows(); ++k) out[k] = Cx(0, 1) * es.eigenvalues()(k);
    return out;
}

BlochVector rtn_apply(const Eigen::MatrixXd& E, int fluct_states, const BlochVector& n0) {
    const int K = fluct_states;
    Eigen::Matrix<double, 15, 15> B = Eigen::Matrix<double, 15, 15>::Zero();
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < K; ++j) B += E.block<15, 15>(15 * i, 15 * j);
    Eigen::Matrix<double, 15, 1> x;
    for (int k = 0; k < 15; ++k) x(k) = n0.v[k];
    x = (B * x) / double(K);
    BlochVector n;
    for (int k = 0; k < 15; ++k) n.v[k] = x(k);
    return n;
}

Eigen::MatrixXd rtn_step_matrix(const QuasiHamiltonian& hq, double dt) {
    return (hq.M * dt).exp();
}

BlochVector rtn_evolve(const QuasiHamiltonian& hq, const BlochVector& n0, double t) {
    return rtn_apply(rtn_step_matrix(hq, t), hq.fluctuator_states, n0);
}

double f_envelope(double g_z, double gamma, double t) {
    return real_checked(envelope_core(g_z, gamma, t), "f_envelope");
}

double g_envelope(double g_z, double gamma, double t) {
    Cx r0 = std::sqrt(Cx(g_z * g_z - gamma * gamma / 4.0, 0.0));
    if (std::abs(r0) < 1e-12) {
        Cx f = envelope_core(g_z, gamma, t);
        return real_checked(f * f, "g_envelope");
    }
    Cx arg = 4.0 * Cx(0, 1) * r0 * t;
    Cx val = (4.0 * g_z * g_z + (4.0 * r0 * r0 - gamma * gamma) * std::cosh(arg) -
              4.0 * Cx(0, 1) * gamma * r0 * std::sinh(arg)) /
             (8.0 * r0 * r0);
    return real_checked(val, "g_envelope");
}

double h_envelope(double g_z, double gamma, double xi, double t) {
    Cx val = envelope_core(g_z, gamma, t) * envelope_core(g_z, xi * gamma, t);
    return real_checked(val, "h_envelope");
}

BlochVector rtn_ising_dqc1_oracle(double J, double g_z, double gamma, double t) {
    double f = std::exp(-gamma * t) * f_envelope(g_z, gamma, t);
    BlochVector n;
    n.a(1) = f * std::cos(2.0 * J * t);
    n.t(0, 2) = -f * std::sin(2.0 * J * t);
    return n;
}

BlochVector rtn_ising_bell_oracle(double c1, double c2, double c3, double g_z, double gamma,
                                  double B_z, double t) {
    double f = std::exp(-gamma * t) * f_envelope(g_z, gamma, t);
    double cb = std::cos(2.0 * B_z * t), sb = std::sin(2.0 * B_z * t);
    BlochVector n;
    n.t(0, 0) = c1 * f * cb;
    n.t(0, 1) = c1 * f * sb;
    n.t(1, 0) = -c2 * f * sb;
    n.t(1, 1) = c2 * f * cb;
    n.t(2, 2) = c3;
    return n;
}

CDPair rtn_werner_oracle(double alpha, double g_z, double gamma, double t) {
    double q = alpha * std::exp(-gamma * t) * std::abs(f_envelope(g_z, gamma, t));
    CDPair r;
    r.concurrence = std::max(0.0, 0.5 * (alpha + 2.0 * q - 1.0));
    // I - J with J pinned by the constant N33 = -alpha
    auto xlog2x = [](double x) { return x > 1e-300 ? x * std::log2(x) : 0.0; };
    double lam[4] = {(1 - alpha) / 4, (1 - alpha) / 4, (1 + alpha + 2 * q) / 4,
                     (1 + alpha - 2 * q) / 4};
    double s = 0;
    for (double l : lam) s -= xlog2x(l);
    r.discord = 2.0 - 0.5 * xlog2x(1 + alpha) - 0.5 * xlog2x(1 - alpha) - s;
    return r;
}

BlochVector two_fluctuator_evolve(const BlochVector& n0, double J, double g_z, double gamma,
                                  double xi, double t) {
    const double C = std::cos(2.0 * J * t), S = std::sin(2.0 * J * t);
    const double f1 = std::exp(-gamma * t) * f_envelope(g_z, gamma, t);
    const double f2 = std::exp(-xi * gamma * t) * f_envelope(g_z, xi * gamma, t);
    BlochVector n = n0;
    auto rot = [&](int i, int j, double sgn, double f) {
        n.v[i] = (n0.v[i] * C + sgn * n0.v[j] * S) * f;
        n.v[j] = (n0.v[j] * C - sgn * n0.v[i] * S) * f;
    };
    // the B-side fluctuator (rate xi gamma) damps the subclass commuting
    // with sz(x)s0, the A-side one (rate gamma) the other subclass
    rot(0, 13, -1.0, f2);  // (N01, N32)
    rot(1, 12, +1.0, f2);  // (N02, N31)
    rot(3, 11, -1.0, f1);  // (N10, N23)
    rot(4, 8, +1.0, f1);   // (N20, N13)
    const double hx = h_envelope(g_z, gamma, xi, t);
    n.t(0, 0) = n0.t(0, 0) * hx;
    n.t(0, 1) = n0.t(0, 1) * hx;
    n.t(1, 0) = n0.t(1, 0) * hx;
    n.t(1, 1) = n0.t(1, 1) * hx;
    // N03, N30, N33 constant
    return n;
}

std::vector<std::complex<double>> xy_rtn_reference_spectrum(double J, double g_z, double gamma) {
    std::vector<Cx> out;
    const Cx mig(0, -gamma);
    Cx r0 = std::sqrt(Cx(g_z * g_z - gamma * gamma / 4.0, 0.0));
    Cx disc = std::sqrt(Cx(std::pow(g_z, 4) + 4 * J * J * g_z * g_z - 4 * J * J * gamma * gamma, 0.0));
    Cx w1 = std::sqrt(Cx(4 * J * J + 2 * g_z * g_z - gamma * gamma, 0.0) + 2.0 * disc);
    Cx w2 = std::sqrt(Cx(4 * J * J + 2 * g_z * g_z - gamma * gamma, 0.0) - 2.0 * disc);

    out.insert(out.end(), 2, Cx(0, 0));
    out.insert(out.end(), 2, Cx(0, -2.0 * gamma));
    for (int s = -1; s <= 1; s += 2) {
        out.insert(out.end(), 2, mig + double(s) * 2.0 * r0);
        out.insert(out.end(), 4, mig + double(s) * w1);
        out.insert(out.end(), 4, mig + double(s) * w2);
    }
    // omega^3 + 2i g omega^2 - 4(4J^2+gz^2) omega - 32 i J^2 g = 0
    // Omega^3 + 4i g Omega^2 - 4(4J^2+gz^2+g^2) Omega - 8 i gz^2 g = 0
    auto cubic_roots = [](Cx a2, Cx a1, Cx a0) {
        // roots of x^3 + a2 x^2 + a1 x + a0 via the companion matrix
        Eigen::Matrix3cd comp = Eigen::Matrix3cd::Zero();
        comp(1, 0) = comp(2, 1) = 1.0;
        comp(0, 2) = -a0;
        comp(1, 2) = -a1;
        comp(2, 2) = -a2;
        Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(comp, false);
        return std::vector<Cx>{es.eigenvalues()(0), es.eigenvalues()(1), es.eigenvalues()(2)};
    };
    for (Cx r : cubic_roots(Cx(0, 2 * gamma), Cx(-4 * (4 * J * J + g_z * g_z), 0),
                            Cx(0, -32 * J * J * gamma)))
        out.push_back(r);
    for (Cx r : cubic_roots(Cx(0, 4 * gamma),
                            Cx(-4 * (4 * J * J + g_z * g_z + gamma * gamma), 0),
                            Cx(0, -8 * g_z * g_z * gamma)))
        out.push_back(r);
    return out;
}

}  // namespace qcorr
