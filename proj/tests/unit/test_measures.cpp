#include <doctest.h>

#include "qcorr/chart.hpp"
#include "qcorr/evolution.hpp"
#include "qcorr/measures.hpp"
#include "test_util.hpp"

using namespace qcorr;
using namespace qcorr::testutil;

namespace {

// Bell-diagonal discord closed form (Luo), used only as a test oracle,
// independent of the production optimizer.
double luo_bell_diagonal_discord(double c1, double c2, double c3) {
    auto xlog2x = [](double x) { return x > 1e-300 ? x * std::log2(x) : 0.0; };
    double lam[4] = {(1 - c1 - c2 - c3) / 4, (1 - c1 + c2 + c3) / 4, (1 + c1 - c2 + c3) / 4,
                     (1 + c1 + c2 - c3) / 4};
    double s = 0;
    for (double l : lam) s -= xlog2x(l);
    double I = 2.0 - s;
    double c = std::max({std::abs(c1), std::abs(c2), std::abs(c3)});
    double J = 1.0 - binary_entropy(0.5 * (1.0 + c));
    return I - J;
}

}  // namespace

TEST_CASE("geometric discord reference values") {
    CHECK(geometric_discord_left(werner_state(1.0)) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(geometric_discord_left(werner_state(0.6)) == doctest::Approx(0.18).epsilon(1e-14));

    Rng rng(5);
    for (int k = 0; k < 50; ++k)
        CHECK(geometric_discord_left(sample_concordant(rng)) < 1e-10);

    BlochVector bad;
    bad.t(0, 0) = bad.t(1, 1) = bad.t(2, 2) = 0.9;
    CHECK_THROWS_AS(geometric_discord_left(bad), std::invalid_argument);
}

TEST_CASE("right geometric discord") {
    // the origin is a symmetric concordant point
    CHECK(geometric_discord_right(BlochVector{}) == 0.0);

    // a generic left-concordant state has nonzero right discord
    ChartPoint x;
    x.p = 0.3;
    x.m = Vec3(0.6, -0.64, 0.48).normalized();
    x.n0 = Vec3(0.2, 0.1, -0.3);
    x.n1 = Vec3(-0.4, 0.5, 0.1);
    BlochVector n = chart_forward(x);
    CHECK(geometric_discord_left(n) < 1e-12);
    CHECK(geometric_discord_right(n) > 1e-4);

    // swap-symmetric state: left == right
    Rng rng(9);
    BlochVector s = random_state(rng);
    BlochVector sym;
    for (int k = 0; k < 15; ++k) sym.v[k] = 0.5 * (s.v[k] + swap_qubits(s).v[k]);
    sym *= 0.6;  // pull toward the maximally mixed state to stay physical
    REQUIRE(is_physical(sym));
    CHECK(geometric_discord_left(sym) ==
          doctest::Approx(geometric_discord_right(sym)).epsilon(1e-12));
}

TEST_CASE("discord on the DQC1 circle peak point") {
    double c = std::sqrt(2.0) / 2.0;
    BlochVector n;
    n.a(1) = c;
    n.t(0, 2) = c;
    auto d = quantum_discord_left(n);
    CHECK(d.value == doctest::Approx(0.2017520734).epsilon(1e-7));
}

TEST_CASE("discord of concordant states vanishes") {
    Rng rng(13);
    for (int k = 0; k < 10; ++k) {
        BlochVector n = sample_concordant(rng);
        CHECK(quantum_discord_left(n).value < 1e-6);
    }
}

TEST_CASE("werner 1/2 discord closed value") {
    double expected = 0.625 * std::log2(5.0) - 0.75 * std::log2(3.0);  // 0.26248...
    CHECK(quantum_discord_left(werner_state(0.5)).value ==
          doctest::Approx(expected).epsilon(1e-7));
}

TEST_CASE("discord matches the Bell-diagonal closed form") {
    Rng rng(21);
    for (int k = 0; k < 25; ++k) {
        double c1, c2, c3;
        for (;;) {
            c1 = rng.uniform(-1, 1);
            c2 = rng.uniform(-1, 1);
            c3 = rng.uniform(-1, 1);
            BlochVector n;
            n.t(0, 0) = c1;
            n.t(1, 1) = c2;
            n.t(2, 2) = c3;
            if (is_physical(n)) break;
        }
        BlochVector n;
        n.t(0, 0) = c1;
        n.t(1, 1) = c2;
        n.t(2, 2) = c3;
        CHECK(quantum_discord_left(n).value ==
              doctest::Approx(luo_bell_diagonal_discord(c1, c2, c3)).epsilon(2e-6));
    }
}

TEST_CASE("discord is invariant under local unitaries") {
    Rng rng(31);
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
        BlochVector n = random_state(rng);
        BlochVector m = apply_local(random_su2(rng), random_su2(rng), n);
        worst = std::max(worst,
                         std::abs(quantum_discord_left(n).value - quantum_discord_left(m).value));
    }
    CHECK(worst < 1e-5);
}

TEST_CASE("D = I - J and basic bounds") {
    Rng rng(17);
    for (int k = 0; k < 200; ++k) {
        BlochVector n = random_state(rng);
        double d = quantum_discord_left(n).value;
        double dg = geometric_discord_left(n);
        CHECK(d >= -1e-7);
        CHECK(dg >= 0.0);
        CHECK(dg <= 0.5 + 1e-12);
        CHECK(2.0 * dg >= d * d - 1e-6);
        CHECK(std::abs(mutual_information(n) - classical_correlation(n) - d) < 1e-9);
    }
}

TEST_CASE("every coordinate axis is concordant") {
    for (int ax = 0; ax < 15; ++ax)
        for (double s : {-0.999, -0.4, 0.25, 0.999}) {
            BlochVector n;
            n.v[ax] = s;
            CHECK(geometric_discord_left(n) < 1e-12);
        }
}

TEST_CASE("geometric entanglement estimator") {
    // a product state is matched exactly by the marginal candidate
    BlochVector p;
    p.set_local_a(Vec3(0.3, -0.2, 0.5));
    p.set_local_b(Vec3(0.1, 0.6, 0));
    p.set_corr(p.local_a() * p.local_b().transpose());
    CHECK(geometric_entanglement(p, 1000, 1) < 1e-14);

    // entangled state: strictly positive estimate
    double e1 = geometric_entanglement(werner_state(1.0), 20000, 1);
    CHECK(e1 > 0.05);

    // min over a growing prefix-stable sample set is non-increasing
    double a = geometric_entanglement(werner_state(0.9), 2000, 3);
    double b = geometric_entanglement(werner_state(0.9), 20000, 3);
    CHECK(b <= a + 1e-15);
}

TEST_CASE("measure_state fills a consistent report") {
    BlochVector n = werner_state(0.8);
    auto r = measure_state(n);
    CHECK(r.discord == doctest::Approx(mutual_information(n) - r.classical).epsilon(1e-10));
    CHECK(r.concurrence == doctest::Approx((3 * 0.8 - 1) / 2).epsilon(1e-10));
    CHECK(r.geometric == doctest::Approx(0.5 * 0.64).epsilon(1e-12));
    CHECK(r.k_max == doctest::Approx(0.64).epsilon(1e-12));
    CHECK(is_concordant(BlochVector{}));
    CHECK_FALSE(is_concordant(n));
}
