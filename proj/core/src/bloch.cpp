#include "qcorr/bloch.hpp"

#include <cmath>

namespace qcorr {

namespace {

std::array<Eigen::Matrix2cd, 4> make_paulis() {
    using namespace std::complex_literals;
    std::array<Eigen::Matrix2cd, 4> s;
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -1i, 1i, 0;
    s[3] << 1, 0, 0, -1;
    return s;
}

constexpr int kPairs[15][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 0}, {2, 0}, {3, 0},
                               {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3},
                               {3, 1}, {3, 2}, {3, 3}};

DensityMatrix kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    DensityMatrix out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

std::array<DensityMatrix, 15> make_tensors() {
    std::array<DensityMatrix, 15> out;
    for (int k = 0; k < 15; ++k) {
        out[k] = kron2(sigma(kPairs[k][0]), sigma(kPairs[k][1]));
    }
    return out;
}

}  // namespace

const Eigen::Matrix2cd& sigma(int k) {
    static const auto s = make_paulis();
    return s[k];
}

const DensityMatrix& pauli_tensor(int k) {
    static const auto t = make_tensors();
    return t[k];
}

DensityMatrix bloch_to_density(const BlochVector& n) {
    DensityMatrix rho = DensityMatrix::Identity();
    for (int k = 0; k < 15; ++k) rho += n.v[k] * pauli_tensor(k);
    return 0.25 * rho;
}

BlochVector density_to_bloch(const DensityMatrix& rho, double tol) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol)
        throw std::invalid_argument("density_to_bloch: matrix is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol)
        throw std::invalid_argument("density_to_bloch: trace is not 1");
    BlochVector n;
    for (int k = 0; k < 15; ++k) n.v[k] = (rho * pauli_tensor(k)).trace().real();
    return n;
}

std::array<double, 4> eigenvalues(const BlochVector& n) {
    Eigen::SelfAdjointEigenSolver<DensityMatrix> es(bloch_to_density(n), Eigen::EigenvaluesOnly);
    std::array<double, 4> lam;
    for (int k = 0; k < 4; ++k) lam[k] = es.eigenvalues()(3 - k);
    return lam;
}

bool is_physical(const BlochVector& n, double tol) {
    return eigenvalues(n)[3] >= -tol;
}

double purity(const BlochVector& n) { return n.norm2(); }

Eigen::Matrix2cd partial_trace_B(const DensityMatrix& rho) {
    Eigen::Matrix2cd r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
    return r;
}

Eigen::Matrix2cd partial_trace_A(const DensityMatrix& rho) {
    Eigen::Matrix2cd r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = rho(i, j) + rho(2 + i, 2 + j);
    return r;
}

double entropy_of_eigenvalues(const double* lam, int n) {
    double s = 0;
    for (int k = 0; k < n; ++k) {
        if (lam[k] > 1e-300) s -= lam[k] * std::log2(lam[k]);
    }
    return s;
}

double entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<DensityMatrix> es(rho, Eigen::EigenvaluesOnly);
    double lam[4];
    for (int k = 0; k < 4; ++k) lam[k] = std::max(0.0, es.eigenvalues()(k));
    return entropy_of_eigenvalues(lam, 4);
}

double entropy(const Eigen::Matrix2cd& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho, Eigen::EigenvaluesOnly);
    double lam[2] = {std::max(0.0, es.eigenvalues()(0)), std::max(0.0, es.eigenvalues()(1))};
    return entropy_of_eigenvalues(lam, 2);
}

double binary_entropy(double p) {
    double lam[2] = {p, 1 - p};
    return entropy_of_eigenvalues(lam, 2);
}

double concurrence(const BlochVector& n) {
    if (!is_physical(n)) throw std::invalid_argument("concurrence: state is not physical");
    DensityMatrix rho = bloch_to_density(n);
    Eigen::SelfAdjointEigenSolver<DensityMatrix> es(rho);
    Eigen::Vector4d d = es.eigenvalues().cwiseMax(0.0);
    DensityMatrix sq = es.eigenvectors() * d.cwiseSqrt().asDiagonal() *
                       es.eigenvectors().adjoint();
    const DensityMatrix& yy = pauli_tensor(10);  // sy (x) sy
    DensityMatrix A = sq * yy * sq.conjugate() * yy;
    Eigen::JacobiSVD<DensityMatrix> svd(A);
    const auto& lam = svd.singularValues();
    return std::max(0.0, lam(0) - lam(1) - lam(2) - lam(3));
}

}  // namespace qcorr
