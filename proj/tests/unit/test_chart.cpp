#include <doctest.h>

#include "qcorr/chart.hpp"
#include "qcorr/measures.hpp"

using namespace qcorr;

TEST_CASE("chart_forward simple point") {
    // p=1/4, m=z, n0=n1=0: only N30 = 2p-1 = -1/2 survives
    ChartPoint x;
    x.p = 0.25;
    x.m = Vec3(0, 0, 1);
    BlochVector n = chart_forward(x);
    CHECK(n.a(2) == doctest::Approx(-0.5));
    double rest = 0;
    for (int k = 0; k < 15; ++k)
        if (k != 5) rest += std::abs(n.v[k]);
    CHECK(rest == 0.0);
}

TEST_CASE("chart invariant checks") {
    ChartPoint x;
    x.p = 0.6;
    CHECK_THROWS_AS(chart_forward(x), std::invalid_argument);
    x.p = 0.25;
    x.m = Vec3(0, 0, 2);
    CHECK_THROWS_AS(chart_forward(x), std::invalid_argument);
    x.m = Vec3(0, 0, 1);
    x.n0 = Vec3(1.2, 0, 0);
    CHECK_THROWS_AS(chart_forward(x), std::invalid_argument);
}

TEST_CASE("magnitude identity on random points") {
    Rng rng(101);
    for (int k = 0; k < 1000; ++k) {
        ChartPoint x = sample_chart_point(rng);
        BlochVector n = chart_forward(x);
        double expect = (2 * x.p - 1) * (2 * x.p - 1) + 2 * x.p * x.p * x.n0.squaredNorm() +
                        2 * (1 - x.p) * (1 - x.p) * x.n1.squaredNorm();
        CHECK(std::abs(n.norm2() - expect) < 1e-13);
    }
}

TEST_CASE("p=0 boundary extension is the product-state limit") {
    ChartPoint x;
    x.p = 0.0;
    x.m = Vec3(0.6, -0.64, 0.48).normalized();
    x.n1 = Vec3(0.2, -0.1, 0.4);
    BlochVector n = chart_forward_closure(x);
    for (int i = 0; i < 3; ++i) {
        CHECK(n.b(i) == doctest::Approx(x.n1[i]));
        CHECK(n.a(i) == doctest::Approx(-x.m[i]));
        for (int j = 0; j < 3; ++j)
            CHECK(n.t(i, j) == doctest::Approx(-x.m[i] * x.n1[j]));
    }
}

TEST_CASE("chart round trips") {
    Rng rng(7);
    double worst = 0;
    for (int k = 0; k < 10000; ++k) {
        ChartPoint x = sample_chart_point(rng);
        BlochVector n = chart_forward(x);
        ChartPoint y = chart_inverse(n);
        BlochVector m = chart_forward(y);
        for (int i = 0; i < 15; ++i) worst = std::max(worst, std::abs(n.v[i] - m.v[i]));
        // parameter recovery (m has a fixed gauge here, no sign ambiguity)
        CHECK(std::abs(y.p - x.p) < 1e-10);
        CHECK((y.m - x.m).norm() < 1e-9);
        CHECK((y.n0 - x.n0).norm() < 1e-8);
        CHECK((y.n1 - x.n1).norm() < 1e-8);
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("recovered p equals (1 - |N_A|)/2") {
    Rng rng(23);
    for (int k = 0; k < 100; ++k) {
        BlochVector n = sample_concordant(rng);
        ChartPoint y = chart_inverse(n);
        CHECK(y.p == doctest::Approx(0.5 - 0.5 * n.local_a().norm()).epsilon(1e-12));
    }
}

TEST_CASE("inverse failure modes") {
    BlochVector origin;
    CHECK_THROWS_AS(chart_inverse(origin), ChartNotInvertible);

    BlochVector off;  // A-local fine but not of chart product form
    off.a(2) = -0.5;
    off.t(0, 0) = 0.3;
    off.t(1, 1) = 0.3;
    CHECK_THROWS_AS(chart_inverse(off), ChartNotOnManifold);
}

TEST_CASE("concordant eigenvalues match the product form") {
    Rng rng(77);
    for (int k = 0; k < 200; ++k) {
        ChartPoint x = sample_chart_point(rng);
        auto lam = concordant_eigenvalues(x);
        double pf[4] = {x.p * (1 + x.n0.norm()) / 2, x.p * (1 - x.n0.norm()) / 2,
                        (1 - x.p) * (1 + x.n1.norm()) / 2, (1 - x.p) * (1 - x.n1.norm()) / 2};
        std::sort(pf, pf + 4, std::greater<>());
        for (int i = 0; i < 4; ++i) CHECK(std::abs(lam[i] - pf[i]) < 1e-10);
    }

    // pure product limit p->0, |n0|->1 irrelevant, |n1|->1: one eigenvalue 1
    ChartPoint x;
    x.p = 0.0;
    x.m = Vec3(0, 0, 1);
    x.n1 = Vec3(0, 0, 1);
    BlochVector n = chart_forward_closure(x);
    auto lam = eigenvalues(n);
    CHECK(lam[0] == doctest::Approx(1.0));
    CHECK(std::abs(lam[1]) < 1e-12);

    // p=1/2 fiber with n0=n1=0: maximally mixed
    ChartPoint c;
    c.p = 0.5;
    auto lc = concordant_eigenvalues(c);
    for (int i = 0; i < 4; ++i) CHECK(lc[i] == doctest::Approx(0.25));
}

TEST_CASE("chart image is concordant and physical") {
    Rng rng(55);
    for (int k = 0; k < 500; ++k) {
        BlochVector n = sample_concordant(rng);
        CHECK(is_physical(n));
        CHECK(geometric_discord_left(n) < 1e-10);
    }
}

TEST_CASE("singularity classification") {
    ChartPoint x;
    x.p = 0.25;
    x.m = Vec3(0.6, 0.8, 0);
    x.n0 = Vec3(0.1, 0, 0);
    x.n1 = Vec3(0, 0.2, 0);
    CHECK(singularity_kind(x) == SingularityKind::Interior);
    x.n0 = Vec3(0, 0, 1);
    CHECK(singularity_kind(x) == SingularityKind::PureBoundary);
    x.n0 = Vec3(0.1, 0, 0);
    x.p = 0.0;
    CHECK(singularity_kind(x) == SingularityKind::ProductBoundary);
    x.p = 0.5;
    CHECK(singularity_kind(x) == SingularityKind::MixedFiber);
    x.p = 0.25;
    x.m = Vec3(0, 0, 1);
    CHECK(singularity_kind(x) == SingularityKind::CoordSingular);
}
