#pragma once

#include "qcorr/bloch.hpp"
#include "qcorr/rng.hpp"

#include <array>

namespace qcorr {

// Point of the parameter manifold A = (0,1/2) x S2 x B3 x B3 that charts
// the zero-discord set minus its singular subset. m is kept as a unit
// vector; theta/phi views are derived.
struct ChartPoint {
    double p = 0.25;
    Vec3 m{0, 0, 1};
    Vec3 n0{0, 0, 0};
    Vec3 n1{0, 0, 0};

    double theta() const { return std::acos(std::clamp(m[2], -1.0, 1.0)); }
    double phi() const { return std::atan2(m[1], m[0]); }

    static ChartPoint from_angles(double theta, double phi, double p,
                                  const Vec3& n0, const Vec3& n1) {
        ChartPoint x;
        x.p = p;
        x.m = Vec3(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                   std::cos(theta));
        x.n0 = n0;
        x.n1 = n1;
        return x;
    }
};

class ChartNotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};
class ChartNotOnManifold : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

void validate_chart_point(const ChartPoint& x);

// N0i = p n0 + (1-p) n1 ; Ni0 = (2p-1) m ; Nij = m_i [p n0 - (1-p) n1]_j.
// Every image point has zero left geometric discord and is physical.
BlochVector chart_forward(const ChartPoint& x);

// Same map without the open-domain checks, for boundary-closure points
// (p in [0,1/2], |n| <= 1); used by classification and closest-point search.
BlochVector chart_forward_closure(const ChartPoint& x);

// Inverse on the chart image with nonvanishing A-side local vector.
// Throws ChartNotInvertible when |N_A| = 0 (the p = 1/2 fiber) and
// ChartNotOnManifold when N is not in the image of the chart.
ChartPoint chart_inverse(const BlochVector& n, double tol = 1e-8);

// Eigenvalues of the charted state, numeric (authoritative), descending.
// The product form {p(1 +- |n0|)/2, (1-p)(1 +- |n1|)/2} holds exactly;
// the paper prints it with |n|^2 in place of |n| (see docs/NOTES in README).
std::array<double, 4> concordant_eigenvalues(const ChartPoint& x);

enum class SingularityKind { Interior, PureBoundary, ProductBoundary, MixedFiber, CoordSingular };

SingularityKind singularity_kind(const ChartPoint& x, double tol = 1e-9);

// Uniform over the parameter domain (NOT uniform in the induced surface
// measure; reweight with sqrt|g| for that).
ChartPoint sample_chart_point(Rng& rng);
BlochVector sample_concordant(Rng& rng);

}  // namespace qcorr
