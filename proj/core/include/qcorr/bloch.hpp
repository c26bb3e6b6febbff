#pragma once

#include <Eigen/Dense>
#include <array>
#include <stdexcept>

namespace qcorr {

using DensityMatrix = Eigen::Matrix4cd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Generalized Bloch vector of a two-qubit state, stored in the flat wire
// order (N01,N02,N03, N10,N20,N30, N11,N12,N13, N21,N22,N23, N31,N32,N33).
// b(i) is the local Bloch vector of qubit B (coefficients of s0 x si),
// a(i) that of qubit A (si x s0), t(i,j) the correlation tensor (si x sj).
struct BlochVector {
    std::array<double, 15> v{};

    double& b(int i) { return v[i]; }
    double& a(int i) { return v[3 + i]; }
    double& t(int i, int j) { return v[6 + 3 * i + j]; }
    double b(int i) const { return v[i]; }
    double a(int i) const { return v[3 + i]; }
    double t(int i, int j) const { return v[6 + 3 * i + j]; }

    Vec3 local_b() const { return Vec3(v[0], v[1], v[2]); }
    Vec3 local_a() const { return Vec3(v[3], v[4], v[5]); }
    Mat3 corr() const {
        Mat3 m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = t(i, j);
        return m;
    }
    void set_local_b(const Vec3& x) { for (int i = 0; i < 3; ++i) v[i] = x[i]; }
    void set_local_a(const Vec3& x) { for (int i = 0; i < 3; ++i) v[3 + i] = x[i]; }
    void set_corr(const Mat3& m) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t(i, j) = m(i, j);
    }

    double norm2() const {
        double s = 0;
        for (double x : v) s += x * x;
        return s;
    }

    BlochVector& operator+=(const BlochVector& o) {
        for (int k = 0; k < 15; ++k) v[k] += o.v[k];
        return *this;
    }
    BlochVector& operator-=(const BlochVector& o) {
        for (int k = 0; k < 15; ++k) v[k] -= o.v[k];
        return *this;
    }
    BlochVector& operator*=(double s) {
        for (double& x : v) x *= s;
        return *this;
    }
    friend BlochVector operator+(BlochVector l, const BlochVector& r) { return l += r; }
    friend BlochVector operator-(BlochVector l, const BlochVector& r) { return l -= r; }
    friend BlochVector operator*(double s, BlochVector x) { return x *= s; }
};

// Pauli matrices, sigma(0) = identity, (1,2,3) = (x,y,z).
const Eigen::Matrix2cd& sigma(int k);
// sigma_a (x) sigma_b for the k-th flat component, k = 0..14.
const DensityMatrix& pauli_tensor(int k);

inline double default_physical_tol() { return 1e-10; }

DensityMatrix bloch_to_density(const BlochVector& n);

// Inverse of bloch_to_density. Rejects non-Hermitian or wrong-trace input.
BlochVector density_to_bloch(const DensityMatrix& rho, double tol = 1e-9);

// Eigenvalues of the associated density matrix, descending.
std::array<double, 4> eigenvalues(const BlochVector& n);

bool is_physical(const BlochVector& n, double tol = default_physical_tol());

// |N|^2; equals 3 exactly for pure states and 4 Tr(rho^2) - 1 in general.
double purity(const BlochVector& n);

Eigen::Matrix2cd partial_trace_B(const DensityMatrix& rho);  // state of qubit A
Eigen::Matrix2cd partial_trace_A(const DensityMatrix& rho);  // state of qubit B

// von Neumann entropy in bits; 0 log 0 := 0, eigenvalues clipped at 0.
double entropy(const DensityMatrix& rho);
double entropy(const Eigen::Matrix2cd& rho);
double entropy_of_eigenvalues(const double* lam, int n);

// Binary entropy in bits.
double binary_entropy(double p);

// Wootters concurrence via singular values of sqrt(rho) (sy x sy) sqrt(rho)* (sy x sy);
// the SVD route keeps absolute accuracy near 1e-15 where the plain
// eigensolve of rho rho~ loses half the digits. Requires a physical state.
double concurrence(const BlochVector& n);

// Inconsistencies that indicate a numerical contract was violated
// (e.g. an envelope with a large imaginary residue). CLI maps this to exit 3.
class NumericalConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qcorr
