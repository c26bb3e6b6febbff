#pragma once

#include "qcorr/bloch.hpp"

#include <cstdint>

namespace qcorr {

// Projective measurement on qubit A, given by its Bloch axis.
struct Measurement {
    Vec3 axis{0, 0, 1};  // unit vector
};

struct CorrelationReport {
    double discord = 0;           // D(B|A), bits
    double geometric = 0;         // left geometric discord
    double geometric_right = 0;   // right geometric discord
    double concurrence = 0;
    double mutual_information = 0;
    double classical = 0;         // J(B|A)
    double k_max = 0;             // largest eigenvalue of L
    Measurement optimal{};        // minimizing measurement axis
};

// D_G = (sum_{i,a} N_{ia}^2 - k_max)/4 with L = a a^T + T T^T.
double geometric_discord_left(const BlochVector& n);
double geometric_discord_right(const BlochVector& n);
double k_max_left(const BlochVector& n);

BlochVector swap_qubits(const BlochVector& n);

// S(B | measurement of A along m.axis) = sum_k p_k S(rho_{B|k}).
double conditional_entropy(const BlochVector& n, const Measurement& m);

struct DiscordResult {
    double value = 0;
    Measurement minimizer{};
};

// Quantum discord D(B|A) over rank-one projective measurements.
// Coarse 64x32 sphere grid, Nelder-Mead refinement, 3 seeded restarts;
// deterministic for identical inputs.
DiscordResult quantum_discord_left(const BlochVector& n);

double mutual_information(const BlochVector& n);
double classical_correlation(const BlochVector& n);

bool is_concordant(const BlochVector& n, double tol = 1e-10);

// Monte Carlo upper bound on the geometric entanglement: the minimum
// Hilbert-Schmidt distance^2 over `samples` randomly drawn separable
// mixtures plus the product of the state's own marginals. An estimator,
// not an exact value; with a fixed seed the sample set for a larger
// `samples` is a superset, so estimates are non-increasing in `samples`.
double geometric_entanglement(const BlochVector& n, std::uint64_t samples,
                              std::uint64_t seed = 0);

CorrelationReport measure_state(const BlochVector& n);

}  // namespace qcorr
