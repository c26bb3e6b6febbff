#pragma once

#include "qcorr/bloch.hpp"
#include "qcorr/rng.hpp"

namespace qcorr::testutil {

// random full-rank physical state via a Gaussian Wishart-like draw
inline BlochVector random_state(Rng& rng) {
    Eigen::Matrix4cd a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = std::complex<double>(rng.normal(), rng.normal());
    Eigen::Matrix4cd rho = a * a.adjoint();
    rho /= rho.trace().real();
    return density_to_bloch(rho);
}

inline Eigen::Matrix2cd random_su2(Rng& rng) {
    Vec3 n = rng.unit_vector();
    double th = rng.uniform(0.0, 2.0 * M_PI);
    Eigen::Matrix2cd u = std::cos(th / 2) * sigma(0);
    for (int k = 0; k < 3; ++k)
        u -= std::complex<double>(0, std::sin(th / 2)) * n[k] * sigma(k + 1);
    return u;
}

inline BlochVector apply_local(const Eigen::Matrix2cd& ua, const Eigen::Matrix2cd& ub,
                               const BlochVector& n) {
    Eigen::Matrix4cd u;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) u.block<2, 2>(2 * i, 2 * j) = ua(i, j) * ub;
    return density_to_bloch(u * bloch_to_density(n) * u.adjoint());
}

}  // namespace qcorr::testutil
