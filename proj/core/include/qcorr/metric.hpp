#pragma once

#include "qcorr/chart.hpp"

#include <functional>

namespace qcorr {

// Tangent frame of the chart at x, in the coordinate order
// (theta, phi, p, n01, n02, n03, n11, n12, n13), with the induced metric
// g_ij = t_i . t_j and its Gram determinant root.
struct ChartGeometry {
    std::array<BlochVector, 9> tangents;
    Eigen::Matrix<double, 9, 9> g;
    double sqrt_det_g = 0;  // numeric sqrt(det g)
    int rank = 0;
    bool degenerate = false;  // rank < 9 (coordinate poles, p=0, p=1/2 with n0=n1)
};

ChartGeometry tangent_frame(const ChartPoint& x);

// Closed form 16 p^3 (1-p)^3 sin(theta) { sum_i [p n0i - (1-p) n1i]^2 + (1-2p)^2 }.
double sqrt_det_g(const ChartPoint& x);

struct IntegrationResult {
    double estimate = 0;
    double stderr_ = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

// Monte Carlo of fn over the charted surface with element sqrt|g| dtheta dphi dp d3n0 d3n1,
// sampling the parameter box uniformly. Deterministic for a fixed seed;
// the stream is chunked so a parallel mapper would reduce to the same sums.
IntegrationResult integrate(const std::function<double(const BlochVector&)>& fn,
                            std::uint64_t samples, std::uint64_t seed);

}  // namespace qcorr
