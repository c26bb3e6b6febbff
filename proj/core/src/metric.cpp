#include "qcorr/metric.hpp"

#include <cmath>

namespace qcorr {

ChartGeometry tangent_frame(const ChartPoint& x) {
    ChartGeometry out;
    const double p = x.p;
    const double th = x.theta(), ph = x.phi();
    const Vec3 m = x.m;
    const Vec3 mth(std::cos(th) * std::cos(ph), std::cos(th) * std::sin(ph), -std::sin(th));
    const Vec3 mph(-std::sin(th) * std::sin(ph), std::sin(th) * std::cos(ph), 0.0);
    const Vec3 c = p * x.n0 - (1.0 - p) * x.n1;

    auto packv = [](const Vec3& nb, const Vec3& na, const Mat3& T) {
        BlochVector n;
        n.set_local_b(nb);
        n.set_local_a(na);
        n.set_corr(T);
        return n;
    };

    out.tangents[0] = packv(Vec3::Zero(), (2 * p - 1) * mth, mth * c.transpose());
    out.tangents[1] = packv(Vec3::Zero(), (2 * p - 1) * mph, mph * c.transpose());
    out.tangents[2] = packv(x.n0 - x.n1, 2.0 * m, m * (x.n0 + x.n1).transpose());
    for (int j = 0; j < 3; ++j) {
        Vec3 e = Vec3::Zero();
        e[j] = 1.0;
        out.tangents[3 + j] = packv(p * e, Vec3::Zero(), p * m * e.transpose());
        out.tangents[6 + j] = packv((1 - p) * e, Vec3::Zero(), -(1 - p) * m * e.transpose());
    }

    for (int i = 0; i < 9; ++i)
        for (int j = i; j < 9; ++j) {
            double s = 0;
            for (int k = 0; k < 15; ++k) s += out.tangents[i].v[k] * out.tangents[j].v[k];
            out.g(i, j) = out.g(j, i) = s;
        }

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 9, 9>> es(out.g, Eigen::EigenvaluesOnly);
    double det = 1.0;
    int rank = 0;
    for (int k = 0; k < 9; ++k) {
        double lam = es.eigenvalues()(k);
        det *= std::max(0.0, lam);
        if (lam > 1e-12) ++rank;
    }
    out.sqrt_det_g = std::sqrt(std::max(0.0, det));
    out.rank = rank;
    out.degenerate = rank < 9;
    return out;
}

double sqrt_det_g(const ChartPoint& x) {
    const double p = x.p;
    const Vec3 c = p * x.n0 - (1.0 - p) * x.n1;
    double st = std::sqrt(std::max(0.0, 1.0 - x.m[2] * x.m[2]));
    double p3 = p * p * p, q3 = (1 - p) * (1 - p) * (1 - p);
    return 16.0 * p3 * q3 * st * (c.squaredNorm() + (1 - 2 * p) * (1 - 2 * p));
}

IntegrationResult integrate(const std::function<double(const BlochVector&)>& fn,
                            std::uint64_t samples, std::uint64_t seed) {
    // parameter-box volume: theta phi p n0 n1
    const double ball = 4.0 * M_PI / 3.0;
    const double vol = M_PI * 2.0 * M_PI * 0.5 * ball * ball;

    const std::uint64_t chunk = 1 << 16;
    double sum = 0, sumsq = 0;
    std::uint64_t done = 0, ci = 0;
    while (done < samples) {
        std::uint64_t m = std::min(chunk, samples - done);
        Rng rng(seed ^ (0xA0761D6478BD642Full * (ci + 1)));
        double s = 0, s2 = 0;
        for (std::uint64_t k = 0; k < m; ++k) {
            ChartPoint x;
            double th = rng.uniform(0.0, M_PI);
            double phv = rng.uniform(0.0, 2.0 * M_PI);
            x.p = rng.uniform(0.0, 0.5);
            x.n0 = rng.ball_vector();
            x.n1 = rng.ball_vector();
            x.m = Vec3(std::sin(th) * std::cos(phv), std::sin(th) * std::sin(phv), std::cos(th));
            double w = sqrt_det_g(x) * fn(chart_forward_closure(x));
            s += w;
            s2 += w * w;
        }
        sum += s;
        sumsq += s2;
        done += m;
        ++ci;
    }
    double mean = sum / double(samples);
    double var = std::max(0.0, sumsq / double(samples) - mean * mean);
    IntegrationResult r;
    r.estimate = vol * mean;
    r.stderr_ = vol * std::sqrt(var / double(samples));
    r.samples = samples;
    r.seed = seed;
    return r;
}

}  // namespace qcorr
