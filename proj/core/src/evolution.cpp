#include "qcorr/evolution.hpp"

#include "qcorr/measures.hpp"

#include <cmath>

namespace qcorr {

namespace {

DensityMatrix kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    DensityMatrix out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

double xlog2x(double x) { return x > 1e-300 ? x * std::log2(x) : 0.0; }

// u(x) = 1 - H2((1+x)/2); increasing in |x|, u(0)=0, u(1)=1
double u_of(double x) {
    double ax = std::min(1.0, std::abs(x));
    return 0.5 * (xlog2x(1 + ax) + xlog2x(1 - ax));
}

}  // namespace

HamiltonianSpec HamiltonianSpec::ising(double J, double Bz) {
    HamiltonianSpec h;
    h.kind = HamiltonianKind::Ising;
    h.J = J;
    h.B_z = Bz;
    return h;
}
HamiltonianSpec HamiltonianSpec::heisenberg(double J) {
    HamiltonianSpec h;
    h.kind = HamiltonianKind::Heisenberg;
    h.J = J;
    return h;
}
HamiltonianSpec HamiltonianSpec::xy(double Jxy, double Jyx, double Bz) {
    HamiltonianSpec h;
    h.kind = HamiltonianKind::XY;
    h.J_xy = Jxy;
    h.J_yx = Jyx;
    h.B_z = Bz;
    return h;
}
HamiltonianSpec HamiltonianSpec::xy_antisym(double Jyx, double Bz) {
    HamiltonianSpec h;
    h.kind = HamiltonianKind::XYAntisym;
    h.J_xy = -Jyx;
    h.J_yx = Jyx;
    h.B_z = Bz;
    return h;
}

DensityMatrix build_hamiltonian(const HamiltonianSpec& h) {
    DensityMatrix H = DensityMatrix::Zero();
    switch (h.kind) {
        case HamiltonianKind::Ising:
            H = h.J * kron2(sigma(3), sigma(3));
            break;
        case HamiltonianKind::Heisenberg:
            H = h.J * (kron2(sigma(1), sigma(1)) + kron2(sigma(2), sigma(2)) +
                       kron2(sigma(3), sigma(3)));
            break;
        case HamiltonianKind::XY:
            H = h.J_xy * kron2(sigma(1), sigma(2)) + h.J_yx * kron2(sigma(2), sigma(1));
            break;
        case HamiltonianKind::XYAntisym:
            if (std::abs(h.J_xy + h.J_yx) > 1e-12)
                throw std::invalid_argument("XYAntisym requires J_xy = -J_yx");
            H = h.J_yx * (kron2(sigma(2), sigma(1)) - kron2(sigma(1), sigma(2)));
            break;
    }
    if (h.B_z != 0.0) H += h.B_z * kron2(sigma(0), sigma(3));
    return H;
}

BlochVector werner_state(double alpha) {
    if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("werner: alpha outside [0,1]");
    BlochVector n;
    n.t(0, 0) = n.t(1, 1) = n.t(2, 2) = -alpha;
    return n;
}

BlochVector bell_diagonal_state(double c1, double c2, double c3) {
    BlochVector n;
    n.t(0, 0) = c1;
    n.t(1, 1) = c2;
    n.t(2, 2) = c3;
    if (!is_physical(n)) throw std::invalid_argument("bell_diagonal: unphysical coefficients");
    return n;
}

BlochVector bell_beta_state(double beta) {
    if (beta < 0.0 || beta > 0.5) throw std::invalid_argument("bell_beta: beta outside [0,1/2]");
    return bell_diagonal_state(beta, beta, -2.0 * beta);
}

BlochVector InitialStateSpec::build() const {
    switch (kind) {
        case InitialStateKind::Werner: return werner_state(alpha);
        case InitialStateKind::BellDiagonal:
            return bell_diagonal_state(bell_c[0], bell_c[1], bell_c[2]);
        case InitialStateKind::BellBeta: return bell_beta_state(beta);
        case InitialStateKind::DQC1: return dqc1_trajectory(1.0, 0.0);
        case InitialStateKind::Raw:
            if (!is_physical(raw)) throw std::invalid_argument("raw initial state is unphysical");
            return raw;
    }
    throw std::logic_error("unreachable");
}

BlochVector unitary_propagate(const DensityMatrix& H, const BlochVector& n0, double t) {
    Eigen::SelfAdjointEigenSolver<DensityMatrix> es(H);
    Eigen::Vector4cd phases;
    for (int k = 0; k < 4; ++k)
        phases(k) = std::exp(std::complex<double>(0.0, -es.eigenvalues()(k) * t));
    DensityMatrix U = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    return density_to_bloch(U * bloch_to_density(n0) * U.adjoint());
}

BlochVector unitary_propagate(const HamiltonianSpec& h, const BlochVector& n0, double t) {
    if (!is_physical(n0)) throw std::invalid_argument("unitary_propagate: unphysical state");
    return unitary_propagate(build_hamiltonian(h), n0, t);
}

BlochVector ising_closed_form(double J, const BlochVector& n0, double t) {
    const double C = std::cos(2.0 * J * t), S = std::sin(2.0 * J * t);
    BlochVector n = n0;
    // index pairs rotating into each other; N03,N30,N33,N11,N12,N21,N22 constant
    auto rot = [&](int i, int j, double sgn) {
        n.v[i] = n0.v[i] * C + sgn * n0.v[j] * S;
        n.v[j] = n0.v[j] * C - sgn * n0.v[i] * S;
    };
    rot(0, 13, -1.0);   // (N01, N32)
    rot(1, 12, +1.0);   // (N02, N31)
    rot(3, 11, -1.0);   // (N10, N23)
    rot(4, 8, +1.0);    // (N20, N13)
    return n;
}

BlochVector heisenberg_closed_form(double J, const BlochVector& n0, double t) {
    const double C = std::cos(2.0 * J * t), S = std::sin(2.0 * J * t);
    const double C2 = C * C, S2 = S * S, CS = C * S;
    Vec3 nb = n0.local_b(), na = n0.local_a();
    Mat3 T = n0.corr();
    Vec3 w(T(1, 2) - T(2, 1), T(2, 0) - T(0, 2), T(0, 1) - T(1, 0));
    BlochVector n = n0;
    for (int i = 0; i < 3; ++i) {
        n.b(i) = C2 * nb[i] + S2 * na[i] + CS * w[i];
        n.a(i) = C2 * na[i] + S2 * nb[i] - CS * w[i];
    }
    auto eps = [](int i, int j, int l) {
        if (i == j || j == l || i == l) return 0.0;
        return ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            int l = 3 - i - j;
            n.t(i, j) = C2 * T(i, j) + S2 * T(j, i) + CS * eps(i, j, l) * (na[l] - nb[l]);
        }
    return n;
}

BlochVector xy_antisym_closed_form(double Jyx, const BlochVector& n0, double t) {
    const double c4 = std::cos(4.0 * Jyx * t), s4 = std::sin(4.0 * Jyx * t);
    const double c2 = std::cos(2.0 * Jyx * t), s2 = std::sin(2.0 * Jyx * t);
    BlochVector n = n0;
    const double n03 = n0.b(2), n30 = n0.a(2), n11 = n0.t(0, 0), n22 = n0.t(1, 1);
    n.b(2) = 0.5 * (n03 + n30 + (n03 - n30) * c4 + (n11 + n22) * s4);
    n.a(2) = 0.5 * (n03 + n30 + (n30 - n03) * c4 - (n11 + n22) * s4);
    n.t(0, 0) = 0.5 * (n11 - n22 + (n30 - n03) * s4 + (n11 + n22) * c4);
    n.t(1, 1) = 0.5 * (n22 - n11 + (n30 - n03) * s4 + (n11 + n22) * c4);
    // N33, N12, N21 constant
    auto rot = [&](int i, int j, double si, double sj) {
        double vi = n0.v[i], vj = n0.v[j];
        n.v[i] = vi * c2 + si * vj * s2;
        n.v[j] = vj * c2 + sj * vi * s2;
    };
    rot(0, 8, -1.0, +1.0);   // (N01, N13)
    rot(1, 11, -1.0, +1.0);  // (N02, N23)
    rot(3, 12, +1.0, -1.0);  // (N10, N31)
    rot(4, 13, +1.0, -1.0);  // (N20, N32)
    return n;
}

BlochVector dqc1_trajectory(double J, double t) {
    BlochVector n;
    n.a(1) = std::cos(2.0 * J * t);
    n.t(0, 2) = -std::sin(2.0 * J * t);
    return n;
}

DiscordPair dqc1_discord_oracle(double J, double t) {
    double c3 = std::cos(2.0 * J * t), s3 = std::sin(2.0 * J * t);
    DiscordPair r;
    r.discord = 1.0 - u_of(c3) - u_of(s3);
    r.geometric = 0.25 * (1.0 - std::max(c3 * c3, s3 * s3));
    return r;
}

BlochVector werner_xy_trajectory(double alpha, double J_yx, double t) {
    BlochVector n;
    double s = std::sin(4.0 * J_yx * t), c = std::cos(4.0 * J_yx * t);
    n.b(2) = -alpha * s;
    n.a(2) = alpha * s;
    n.t(0, 0) = n.t(1, 1) = -alpha * c;
    n.t(2, 2) = -alpha;
    return n;
}

BlochVector bell_beta_trajectory(double beta, double J_yx, double t) {
    BlochVector n;
    double s = std::sin(4.0 * J_yx * t), c = std::cos(4.0 * J_yx * t);
    n.b(2) = beta * s;
    n.a(2) = -beta * s;
    n.t(0, 0) = n.t(1, 1) = beta * c;
    n.t(2, 2) = -2.0 * beta;
    return n;
}

CDPair werner_xy_oracles(double alpha, double J_yx, double t) {
    CDPair r;
    if (std::abs(alpha - 1.0) < 1e-12) {
        double x = 4.0 * J_yx * t;
        r.concurrence = std::abs(std::cos(x));
        double a = std::cos(x / 2) + std::sin(x / 2);
        double b = std::cos(x / 2) - std::sin(x / 2);
        r.discord = 1.0 - 0.5 * (xlog2x(a * a) + xlog2x(b * b));
        return r;
    }
    if (std::abs(alpha - 0.5) < 1e-12) {
        double x8 = std::cos(8.0 * J_yx * t);
        double delta = std::sqrt(std::max(0.0, 2.0 * std::cos(16.0 * J_yx * t) + 18.0 * x8 + 16.0));
        double dl = (std::sqrt(9.0 + 4.0 * x8 + 2.0 * delta) -
                     std::sqrt(std::max(0.0, 9.0 + 4.0 * x8 - 2.0 * delta)) - 2.0) / 8.0;
        r.concurrence = std::max(0.0, dl);
        double s = std::sin(4.0 * J_yx * t);
        r.discord = 0.625 * std::log2(5.0) - (3.0 - 2.0 * s) / 8.0 * std::log2(3.0 - 2.0 * s) -
                    (3.0 + 2.0 * s) / 8.0 * std::log2(3.0 + 2.0 * s);
        return r;
    }
    throw std::invalid_argument("werner_xy_oracles: closed forms exist for alpha = 1 and 1/2");
}

CDPair bell_beta_oracles(double beta, double J_yx, double t) {
    if (beta < 0.0 || beta > 0.5) throw std::invalid_argument("bell_beta_oracles: beta outside [0,1/2]");
    CDPair r;
    double c = std::cos(4.0 * J_yx * t);
    double gb = std::sqrt(std::max(0.0, c * c * (1.0 + 4.0 * beta + 4.0 * beta * beta * c * c)));
    double base = 1.0 + 4.0 * beta + 8.0 * beta * beta * c * c;
    double db = (std::sqrt(base + 4.0 * beta * gb) -
                 std::sqrt(std::max(0.0, base - 4.0 * beta * gb)) - 2.0 * (1.0 - 2.0 * beta)) / 4.0;
    r.concurrence = std::max(0.0, db);
    r.discord = quantum_discord_left(bell_beta_trajectory(beta, J_yx, t)).value;
    return r;
}

}  // namespace qcorr
