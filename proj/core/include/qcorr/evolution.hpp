#pragma once

#include "qcorr/bloch.hpp"

namespace qcorr {

enum class HamiltonianKind { Ising, Heisenberg, XY, XYAntisym };

// Two-qubit Hamiltonians (hbar = 1):
//   Ising       J sz(x)sz
//   Heisenberg  J (sx(x)sx + sy(x)sy + sz(x)sz)
//   XY          Jxy sx(x)sy + Jyx sy(x)sx
//   XYAntisym   XY with Jxy = -Jyx (Dzyaloshinskii-Moriya form)
// plus an optional field Bz s0(x)sz on qubit B.
struct HamiltonianSpec {
    HamiltonianKind kind = HamiltonianKind::Ising;
    double J = 1.0;
    double J_xy = 0.0;
    double J_yx = 0.0;
    double B_z = 0.0;

    static HamiltonianSpec ising(double J, double Bz = 0.0);
    static HamiltonianSpec heisenberg(double J);
    static HamiltonianSpec xy(double Jxy, double Jyx, double Bz = 0.0);
    static HamiltonianSpec xy_antisym(double Jyx, double Bz = 0.0);
};

DensityMatrix build_hamiltonian(const HamiltonianSpec& h);

enum class InitialStateKind { Werner, BellDiagonal, BellBeta, DQC1, Raw };

struct InitialStateSpec {
    InitialStateKind kind = InitialStateKind::Werner;
    double alpha = 1.0;             // Werner
    Vec3 bell_c{0, 0, 0};           // BellDiagonal
    double beta = 0.5;              // BellBeta: N11=N22=beta, N33=-2beta
    BlochVector raw{};

    BlochVector build() const;
};

BlochVector werner_state(double alpha);
BlochVector bell_diagonal_state(double c1, double c2, double c3);
BlochVector bell_beta_state(double beta);

// Exact propagation by the eigendecomposition of H (no time stepping).
BlochVector unitary_propagate(const HamiltonianSpec& h, const BlochVector& n0, double t);
BlochVector unitary_propagate(const DensityMatrix& H, const BlochVector& n0, double t);

// Component maps equal to unitary_propagate at machine precision (Bz = 0).
BlochVector ising_closed_form(double J, const BlochVector& n0, double t);
BlochVector heisenberg_closed_form(double J, const BlochVector& n0, double t);
BlochVector xy_antisym_closed_form(double J_yx, const BlochVector& n0, double t);

// Ising evolution of the state with N20(0) = 1: the unit circle
// N20^2 + N13^2 = 1, separable (C = 0) for all t.
BlochVector dqc1_trajectory(double J, double t);

struct DiscordPair {
    double discord = 0;
    double geometric = 0;
};
// Closed-form discord / geometric discord along the DQC1 circle.
DiscordPair dqc1_discord_oracle(double J, double t);

BlochVector werner_xy_trajectory(double alpha, double J_yx, double t);
BlochVector bell_beta_trajectory(double beta, double J_yx, double t);

struct CDPair {
    double concurrence = 0;
    double discord = 0;
};
// Closed forms for the Werner state under the antisymmetric XY model;
// alpha must be 1 or 1/2 (the printed cases).
CDPair werner_xy_oracles(double alpha, double J_yx, double t);

// Concurrence closed form for the Bell-diagonal beta family; the discord
// member is computed by the numeric pipeline along the closed trajectory
// (no faithful printed formula exists for this family).
CDPair bell_beta_oracles(double beta, double J_yx, double t);

}  // namespace qcorr
