#pragma once

#include "qcorr/evolution.hpp"

#include <complex>
#include <vector>

namespace qcorr {

enum class NoiseMode { SingleOnA, TwoUncorrelated, Correlated };

struct NoiseSpec {
    double g_z = 0.0;    // fluctuator coupling
    double gamma = 1.0;  // switching rate (> 0)
    double xi = 1.0;     // second-fluctuator rate ratio (> 0)
    NoiseMode mode = NoiseMode::SingleOnA;
};

// Markovian iff gamma/2 > g_z; the boundary gamma/2 = g_z reports false
// and sets the flag.
struct MarkovianResult {
    bool markovian = false;
    bool boundary = false;
};
MarkovianResult is_markovian(const NoiseSpec& noise);

// The 15K x 15K real generator M of the fluctuator-resolved Bloch dynamics
// (K = 2 fluctuator states, 4 for two fluctuators). H_q = i M; the
// delta-t -> 0 limit of the transfer-matrix construction is taken
// analytically: diagonal blocks adj(H_s) - (sum of rates) I, switching
// blocks rate * I.
struct QuasiHamiltonian {
    Eigen::MatrixXd M;
    int fluctuator_states = 2;

    Eigen::MatrixXcd hq() const { return std::complex<double>(0, 1) * M; }
    std::vector<std::complex<double>> hq_spectrum() const;
};

// 15x15 adjoint generator: d/dt N_a = sum_b A_ab N_b for rho' = -i[H, rho].
Eigen::Matrix<double, 15, 15> adjoint_generator(const DensityMatrix& H);

QuasiHamiltonian build_quasi_hamiltonian(const HamiltonianSpec& h, const NoiseSpec& noise);

// N(t) = <f| exp(-i Hq t) |i> N0 with uniform entry/exit over fluctuator states.
BlochVector rtn_evolve(const QuasiHamiltonian& hq, const BlochVector& n0, double t);

// Propagator snapshot for uniform-grid trajectories: E(dt), advanced by
// repeated multiplication.
Eigen::MatrixXd rtn_step_matrix(const QuasiHamiltonian& hq, double dt);
BlochVector rtn_apply(const Eigen::MatrixXd& E, int fluct_states, const BlochVector& n0);

// F(R0) = [2 R0 cosh(2i R0 t) - i gamma sinh(2i R0 t)]/(2 R0),
// R0 = sqrt(g_z^2 - gamma^2/4). Real in both regimes; an imaginary
// residue above 1e-10 raises NumericalConsistencyError.
double f_envelope(double g_z, double gamma, double t);
// G(R0): the xi = 1 limit of the two-fluctuator X-class envelope (= F^2).
double g_envelope(double g_z, double gamma, double t);
// H(R0, xi) = F(gamma) * F(xi gamma), the product of the two fluctuators'
// envelopes (X0 = sqrt(4R0^2 - gamma^2(xi^2-1))/2 equals the second R).
double h_envelope(double g_z, double gamma, double xi, double t);

// Ising + single RTN closed maps (oracles for rtn_evolve).
BlochVector rtn_ising_dqc1_oracle(double J, double g_z, double gamma, double t);
BlochVector rtn_ising_bell_oracle(double c1, double c2, double c3, double g_z, double gamma,
                                  double B_z, double t);

// Werner under Ising + RTN + Bz: exact discord and concurrence.
// D from the Bell-diagonal closed form (the evolved state is a local
// rotation of Bell-diagonal(-q,-q,-alpha), q = alpha e^{-gamma t}|F|);
// C = max(0, (alpha + 2q - 1)/2).
CDPair rtn_werner_oracle(double alpha, double g_z, double gamma, double t);

// Ising + two uncorrelated fluctuators (rates gamma, xi gamma), closed maps.
BlochVector two_fluctuator_evolve(const BlochVector& n0, double J, double g_z, double gamma,
                                  double xi, double t);

// Reference spectrum of H_q for the antisymmetric XY model with a single
// fluctuator and Bz = 0: the closed-form 30-value multiset
// {0 x2, -2ig x2, (-ig +- 2R0) x2, (-ig +- W_{1,2}) x4, omega-roots, Omega-roots}.
std::vector<std::complex<double>> xy_rtn_reference_spectrum(double J_yx, double g_z,
                                                            double gamma);

}  // namespace qcorr
