#include "qcorr/chart.hpp"

#include <cmath>

namespace qcorr {

void validate_chart_point(const ChartPoint& x) {
    if (!(x.p > 0.0 && x.p < 0.5))
        throw std::invalid_argument("chart point: p must lie in (0, 1/2)");
    if (std::abs(x.m.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("chart point: m must be a unit vector");
    if (x.n0.norm() >= 1.0 || x.n1.norm() >= 1.0)
        throw std::invalid_argument("chart point: n0, n1 must lie in the open unit ball");
}

static BlochVector forward_impl(const ChartPoint& x) {
    BlochVector n;
    Vec3 s = x.p * x.n0 + (1.0 - x.p) * x.n1;
    Vec3 c = x.p * x.n0 - (1.0 - x.p) * x.n1;
    n.set_local_b(s);
    n.set_local_a((2.0 * x.p - 1.0) * x.m);
    n.set_corr(x.m * c.transpose());
    return n;
}

BlochVector chart_forward(const ChartPoint& x) {
    validate_chart_point(x);
    return forward_impl(x);
}

BlochVector chart_forward_closure(const ChartPoint& x) {
    if (x.p < -1e-12 || x.p > 0.5 + 1e-12 || x.n0.norm() > 1.0 + 1e-12 ||
        x.n1.norm() > 1.0 + 1e-12)
        throw std::invalid_argument("chart closure point out of range");
    return forward_impl(x);
}

ChartPoint chart_inverse(const BlochVector& n, double tol) {
    Vec3 na = n.local_a();
    double r = na.norm();
    if (r < 1e-14)
        throw ChartNotInvertible("chart_inverse: N_A = 0 lies on the p = 1/2 fiber");
    if (r >= 1.0)
        throw ChartNotOnManifold("chart_inverse: |N_A| >= 1");

    ChartPoint x;
    x.p = 0.5 - 0.5 * r;
    x.m = na / (2.0 * x.p - 1.0);  // = -na/r, so that (2p-1) m = N_A

    // row with the best-conditioned division
    int j = 0;
    for (int k = 1; k < 3; ++k)
        if (std::abs(x.m[k]) > std::abs(x.m[j])) j = k;

    Mat3 T = n.corr();
    Vec3 c = T.row(j).transpose() / x.m[j];
    Vec3 s = n.local_b();
    x.n0 = (s + c) / (2.0 * x.p);
    x.n1 = (s - c) / (2.0 * (1.0 - x.p));

    if (x.n0.norm() > 1.0 + tol || x.n1.norm() > 1.0 + tol)
        throw ChartNotOnManifold("chart_inverse: recovered n0/n1 outside the unit ball");
    BlochVector back = forward_impl(x);
    double err = 0;
    for (int k = 0; k < 15; ++k) err = std::max(err, std::abs(back.v[k] - n.v[k]));
    if (err > tol)
        throw ChartNotOnManifold("chart_inverse: input is not in the image of the chart");
    return x;
}

std::array<double, 4> concordant_eigenvalues(const ChartPoint& x) {
    return eigenvalues(chart_forward_closure(x));
}

SingularityKind singularity_kind(const ChartPoint& x, double tol) {
    if (x.n0.norm() >= 1.0 - tol || x.n1.norm() >= 1.0 - tol)
        return SingularityKind::PureBoundary;    // class 1
    if (x.p <= tol) return SingularityKind::ProductBoundary;  // class 2
    if (x.p >= 0.5 - tol) return SingularityKind::MixedFiber; // class 3
    double st = std::sqrt(std::max(0.0, 1.0 - x.m[2] * x.m[2]));
    if (st <= tol) return SingularityKind::CoordSingular;
    return SingularityKind::Interior;
}

ChartPoint sample_chart_point(Rng& rng) {
    ChartPoint x;
    x.p = rng.uniform(0.0, 0.5);
    x.m = rng.unit_vector();
    x.n0 = rng.ball_vector();
    x.n1 = rng.ball_vector();
    return x;
}

BlochVector sample_concordant(Rng& rng) { return forward_impl(sample_chart_point(rng)); }

}  // namespace qcorr
