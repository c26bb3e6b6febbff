#include <doctest.h>

#include "qcorr/chart.hpp"
#include "qcorr/metric.hpp"

using namespace qcorr;

namespace {

// central finite differences of the chart in (theta, phi, p, n0, n1)
std::array<BlochVector, 9> fd_tangents(const ChartPoint& x, double h = 1e-6) {
    std::array<double, 9> c = {x.theta(), x.phi(), x.p,    x.n0[0], x.n0[1],
                               x.n0[2],   x.n1[0], x.n1[1], x.n1[2]};
    auto eval = [](const std::array<double, 9>& a) {
        return chart_forward_closure(ChartPoint::from_angles(
            a[0], a[1], a[2], Vec3(a[3], a[4], a[5]), Vec3(a[6], a[7], a[8])));
    };
    std::array<BlochVector, 9> out;
    for (int k = 0; k < 9; ++k) {
        auto p = c, m = c;
        p[k] += h;
        m[k] -= h;
        BlochVector dp = eval(p), dm = eval(m);
        for (int i = 0; i < 15; ++i) out[k].v[i] = (dp.v[i] - dm.v[i]) / (2 * h);
    }
    return out;
}

}  // namespace

TEST_CASE("tangent frame matches finite differences") {
    Rng rng(5);
    double worst = 0;
    for (int k = 0; k < 200; ++k) {
        ChartPoint x = sample_chart_point(rng);
        if (std::abs(x.m[2]) > 0.99) continue;  // away from coordinate poles
        auto frame = tangent_frame(x);
        auto fd = fd_tangents(x);
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 15; ++j)
                worst = std::max(worst, std::abs(frame.tangents[i].v[j] - fd[i].v[j]));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("metric entries and sparsity") {
    ChartPoint x = ChartPoint::from_angles(1.1, 2.3, 0.37, Vec3(0.1, 0.2, 0.3),
                                           Vec3(-0.5, 0.2, 0.6));
    auto fr = tangent_frame(x);
    const auto& g = fr.g;

    CHECK(g(3, 3) == doctest::Approx(2 * x.p * x.p).epsilon(1e-13));
    CHECK(g(4, 4) == doctest::Approx(2 * x.p * x.p).epsilon(1e-13));
    CHECK(g(5, 5) == doctest::Approx(2 * x.p * x.p).epsilon(1e-13));
    CHECK(g(6, 6) == doctest::Approx(2 * (1 - x.p) * (1 - x.p)).epsilon(1e-13));

    // couplings live on row/col 3 (the p coordinate) only
    for (int j = 0; j < 3; ++j) {
        CHECK(g(2, 3 + j) == doctest::Approx(2 * x.p * x.n0[j]).epsilon(1e-12));
        CHECK(g(2, 6 + j) == doctest::Approx(-2 * (1 - x.p) * x.n1[j]).epsilon(1e-12));
    }
    for (int i = 0; i < 9; ++i)
        for (int j = i + 1; j < 9; ++j) {
            if (i == 2 || j == 2) continue;
            CHECK(std::abs(g(i, j)) < 1e-12);
        }
    CHECK(fr.rank == 9);
    CHECK_FALSE(fr.degenerate);
}

TEST_CASE("coordinate pole kills the phi tangent") {
    ChartPoint x = ChartPoint::from_angles(0.0, 0.4, 0.3, Vec3(0.1, 0, 0), Vec3(0, 0.2, 0));
    auto fr = tangent_frame(x);
    double tphi = 0;
    for (int i = 0; i < 15; ++i) tphi = std::max(tphi, std::abs(fr.tangents[1].v[i]));
    CHECK(tphi < 1e-12);
    CHECK(fr.degenerate);
}

TEST_CASE("sqrt_det_g closed form") {
    // p=1/4, n0=n1=0, theta=pi/2: 16 (1/64)(27/64) (1/4) = 27/1024
    ChartPoint x = ChartPoint::from_angles(M_PI / 2, 0.3, 0.25, Vec3::Zero(), Vec3::Zero());
    CHECK(sqrt_det_g(x) == doctest::Approx(27.0 / 1024.0).epsilon(1e-14));
    CHECK(tangent_frame(x).sqrt_det_g == doctest::Approx(27.0 / 1024.0).epsilon(1e-10));

    // singular fiber p->1/2, n0=n1
    ChartPoint s = ChartPoint::from_angles(1.0, 0.5, 0.5 - 1e-13, Vec3(0.1, 0.2, 0.3),
                                           Vec3(0.1, 0.2, 0.3));
    CHECK(sqrt_det_g(s) < 1e-12);
}

TEST_CASE("closed form equals the Gram determinant") {
    Rng rng(19);
    for (int k = 0; k < 1000; ++k) {
        ChartPoint x = sample_chart_point(rng);
        double closed = sqrt_det_g(x);
        double gram = tangent_frame(x).sqrt_det_g;
        if (closed < 1e-12) continue;
        CHECK(std::abs(gram - closed) / closed < 1e-8);
    }
}

TEST_CASE("integration: frozen 9-volume oracle") {
    // analytic: 16 * 4pi * V_B^2 * I_p with I_p = 1/630, so 512 pi^3 / 2835
    const double exact = 512.0 * std::pow(M_PI, 3) / 2835.0;
    auto one = [](const BlochVector&) { return 1.0; };
    auto r = integrate(one, 400000, 2024);
    CHECK(std::abs(r.estimate - exact) < 5.0 * r.stderr_);
    CHECK(r.stderr_ < 0.02);

    // deterministic under the same seed
    auto r2 = integrate(one, 400000, 2024);
    CHECK(r.estimate == r2.estimate);

    // seed stability to ~3 significant figures
    auto r3 = integrate(one, 400000, 77);
    CHECK(std::abs(r.estimate - r3.estimate) / exact < 5e-3);
}

TEST_CASE("integration: indicator and scaling") {
    auto ind = [](const BlochVector& n) {
        return chart_inverse(n).p > 0.25 ? 1.0 : 0.0;
    };
    auto r = integrate(ind, 200000, 5);
    auto全 = integrate([](const BlochVector&) { return 1.0; }, 200000, 5);
    double frac = r.estimate / 全.estimate;
    CHECK(frac > 0.0);
    CHECK(frac < 1.0);

    auto a = integrate([](const BlochVector& n) { return n.norm2(); }, 100000, 10);
    auto b = integrate([](const BlochVector& n) { return n.norm2(); }, 400000, 10);
    CHECK(b.stderr_ < a.stderr_);
    CHECK(b.stderr_ > 0.3 * a.stderr_);  // ~ sqrt(4) shrink
}
