#include "qcorr/measures.hpp"

#include "qcorr/optim.hpp"
#include "qcorr/rng.hpp"

#include <cmath>

namespace qcorr {

namespace {

Vec3 sph(double th, double ph) {
    return Vec3(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
}

}  // namespace

double k_max_left(const BlochVector& n) {
    Vec3 a = n.local_a();
    Mat3 T = n.corr();
    Mat3 L = a * a.transpose() + T * T.transpose();
    Eigen::SelfAdjointEigenSolver<Mat3> es(L, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(2);
}

double geometric_discord_left(const BlochVector& n) {
    if (!is_physical(n)) throw std::invalid_argument("geometric_discord_left: unphysical state");
    double s = n.local_a().squaredNorm() + n.corr().squaredNorm();
    return 0.25 * (s - k_max_left(n));
}

BlochVector swap_qubits(const BlochVector& n) {
    BlochVector out;
    out.set_local_b(n.local_a());
    out.set_local_a(n.local_b());
    out.set_corr(n.corr().transpose());
    return out;
}

double geometric_discord_right(const BlochVector& n) {
    return geometric_discord_left(swap_qubits(n));
}

double conditional_entropy(const BlochVector& n, const Measurement& m) {
    const Vec3 v = m.axis;
    const Vec3 a = n.local_a();
    const Vec3 nb = n.local_b();
    const Mat3 T = n.corr();
    double s = 0;
    for (int sg = -1; sg <= 1; sg += 2) {
        double pk = 0.5 * (1.0 + sg * v.dot(a));
        if (pk < 1e-15) continue;
        Vec3 b = (nb + sg * (T.transpose() * v)) / (2.0 * pk);
        double r = std::min(1.0, b.norm());
        s += pk * binary_entropy(0.5 * (1.0 + r));
    }
    return s;
}

DiscordResult quantum_discord_left(const BlochVector& n) {
    if (!is_physical(n)) throw std::invalid_argument("quantum_discord_left: unphysical state");

    auto cond = [&](double th, double ph) {
        return conditional_entropy(n, Measurement{sph(th, ph)});
    };

    // coarse sphere grid: 64 azimuthal x 32 polar intervals
    double best = 1e300, bth = 0, bph = 0;
    for (int i = 0; i <= 32; ++i) {
        double th = M_PI * i / 32.0;
        for (int j = 0; j < 64; ++j) {
            double ph = 2.0 * M_PI * j / 64.0;
            double s = cond(th, ph);
            if (s < best) { best = s; bth = th; bph = ph; }
        }
    }

    auto refine = [&](double th0, double ph0) {
        auto f = [&](const Eigen::VectorXd& x) { return cond(x(0), x(1)); };
        Eigen::VectorXd x0(2);
        x0 << th0, ph0;
        return nelder_mead(f, x0, 0.05, 1e-10, 5e-14, 600);
    };

    auto r = refine(bth, bph);
    double smin = std::min(best, r.fval);
    Eigen::VectorXd xmin = r.x;

    Rng rng(0x6d9f51c26d65e0f5ull);  // fixed-seed restarts; deterministic
    for (int k = 0; k < 3; ++k) {
        double th = std::acos(2.0 * rng.uniform() - 1.0);
        double ph = rng.uniform(0.0, 2.0 * M_PI);
        auto rr = refine(th, ph);
        if (rr.fval < smin) { smin = rr.fval; xmin = rr.x; }
    }

    double sa = binary_entropy(0.5 * (1.0 + n.local_a().norm()));
    auto lam = eigenvalues(n);
    double lc[4];
    for (int k = 0; k < 4; ++k) lc[k] = std::max(0.0, lam[k]);
    double sab = entropy_of_eigenvalues(lc, 4);
    return {sa - sab + smin, Measurement{sph(xmin(0), xmin(1))}};
}

double mutual_information(const BlochVector& n) {
    double sa = binary_entropy(0.5 * (1.0 + n.local_a().norm()));
    double sb = binary_entropy(0.5 * (1.0 + n.local_b().norm()));
    auto lam = eigenvalues(n);
    double lc[4];
    for (int k = 0; k < 4; ++k) lc[k] = std::max(0.0, lam[k]);
    return sa + sb - entropy_of_eigenvalues(lc, 4);
}

double classical_correlation(const BlochVector& n) {
    auto d = quantum_discord_left(n);
    double sb = binary_entropy(0.5 * (1.0 + n.local_b().norm()));
    return sb - conditional_entropy(n, d.minimizer);
}

bool is_concordant(const BlochVector& n, double tol) {
    return geometric_discord_left(n) <= tol;
}

double geometric_entanglement(const BlochVector& n, std::uint64_t samples, std::uint64_t seed) {
    // candidate 0: product of the state's own marginals
    BlochVector prod;
    prod.set_local_a(n.local_a());
    prod.set_local_b(n.local_b());
    prod.set_corr(n.local_a() * n.local_b().transpose());
    double best = 0.25 * (n - prod).norm2();

    Rng rng(seed);
    for (std::uint64_t k = 0; k < samples; ++k) {
        int terms = 1 + int(rng.next_u64() % 4);
        double w[4], wsum = 0;
        for (int i = 0; i < terms; ++i) {
            w[i] = -std::log(1.0 - rng.uniform());
            wsum += w[i];
        }
        BlochVector chi;
        for (int i = 0; i < terms; ++i) {
            double p = w[i] / wsum;
            Vec3 a = rng.ball_vector();
            Vec3 b = rng.ball_vector();
            for (int j = 0; j < 3; ++j) {
                chi.a(j) += p * a[j];
                chi.b(j) += p * b[j];
            }
            Mat3 T = a * b.transpose();
            for (int i2 = 0; i2 < 3; ++i2)
                for (int j2 = 0; j2 < 3; ++j2) chi.t(i2, j2) += p * T(i2, j2);
        }
        best = std::min(best, 0.25 * (n - chi).norm2());
    }
    return best;
}

CorrelationReport measure_state(const BlochVector& n) {
    CorrelationReport r;
    auto d = quantum_discord_left(n);
    r.discord = d.value;
    r.optimal = d.minimizer;
    r.geometric = geometric_discord_left(n);
    r.geometric_right = geometric_discord_right(n);
    r.concurrence = concurrence(n);
    r.mutual_information = mutual_information(n);
    double sb = binary_entropy(0.5 * (1.0 + n.local_b().norm()));
    r.classical = sb - conditional_entropy(n, d.minimizer);
    r.k_max = k_max_left(n);
    return r;
}

}  // namespace qcorr
