#include <doctest.h>

#include "qcorr/bloch.hpp"
#include "qcorr/evolution.hpp"
#include "test_util.hpp"

using namespace qcorr;
using namespace qcorr::testutil;

TEST_CASE("bloch_to_density basics") {
    BlochVector zero;
    DensityMatrix rho = bloch_to_density(zero);
    CHECK((rho - 0.25 * DensityMatrix::Identity()).cwiseAbs().maxCoeff() == doctest::Approx(0.0));

    BlochVector n;
    n.t(2, 2) = -1.0;  // (I - sz sz)/4, eigenvalues {0, 0, 1/2, 1/2}
    auto lam = eigenvalues(n);
    CHECK(lam[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(lam[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(lam[2]) < 1e-14);
    CHECK(std::abs(lam[3]) < 1e-14);
}

TEST_CASE("werner alpha=1 is the singlet projector") {
    DensityMatrix rho = bloch_to_density(werner_state(1.0));
    Eigen::Vector4cd psi;
    psi << 0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0;
    DensityMatrix proj = psi * psi.adjoint();
    CHECK((rho - proj).cwiseAbs().maxCoeff() < 1e-15);

    BlochVector back = density_to_bloch(proj);
    CHECK(back.t(0, 0) == doctest::Approx(-1.0));
    CHECK(back.t(1, 1) == doctest::Approx(-1.0));
    CHECK(back.t(2, 2) == doctest::Approx(-1.0));
    CHECK(back.local_a().norm() < 1e-15);
    CHECK(back.local_b().norm() < 1e-15);
}

TEST_CASE("density_to_bloch validates input") {
    DensityMatrix m = DensityMatrix::Identity();
    m(0, 1) = 0.3;  // not Hermitian
    CHECK_THROWS_AS(density_to_bloch(m), std::invalid_argument);
    CHECK_THROWS_AS(density_to_bloch(DensityMatrix::Identity()), std::invalid_argument);  // trace 4
    CHECK(density_to_bloch(0.25 * DensityMatrix::Identity()).norm2() == doctest::Approx(0.0));
}

TEST_CASE("round trip on random physical states") {
    Rng rng(42);
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
        BlochVector n = random_state(rng);
        BlochVector back = density_to_bloch(bloch_to_density(n));
        for (int i = 0; i < 15; ++i) worst = std::max(worst, std::abs(back.v[i] - n.v[i]));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("is_physical on the Bell-diagonal examples") {
    CHECK_FALSE(is_physical(BlochVector{{0, 0, 0, 0, 0, 0, -0.7, 0, 0, 0, -0.3, 0, 0, 0, 0.99}}));
    CHECK(is_physical(BlochVector{{0, 0, 0, 0, 0, 0, -0.7, 0, 0, 0, -0.3, 0, 0, 0, 0}}));
    CHECK(is_physical(BlochVector{}));
}

TEST_CASE("purity") {
    CHECK(purity(BlochVector{}) == 0.0);
    CHECK(purity(werner_state(1.0)) == doctest::Approx(3.0));
    CHECK(purity(werner_state(0.5)) == doctest::Approx(0.75));

    Rng rng(7);
    for (int k = 0; k < 50; ++k) {
        BlochVector n = random_state(rng);
        DensityMatrix rho = bloch_to_density(n);
        double tr2 = (rho * rho).trace().real();
        CHECK(purity(n) == doctest::Approx(4.0 * tr2 - 1.0).epsilon(1e-12));
    }
}

TEST_CASE("concurrence reference values") {
    CHECK(concurrence(werner_state(1.0 / 3.0)) < 1e-12);
    CHECK(concurrence(werner_state(1.0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence(bell_beta_state(0.5)) == doctest::Approx(0.5).epsilon(1e-12));
    // separable when alpha <= 1/3, entangled beyond
    CHECK(concurrence(werner_state(0.32)) == 0.0);
    CHECK(concurrence(werner_state(0.35)) > 0.0);

    BlochVector bad;
    bad.t(0, 0) = bad.t(1, 1) = bad.t(2, 2) = 0.9;  // unphysical
    CHECK_THROWS_AS(concurrence(bad), std::invalid_argument);
}

TEST_CASE("concurrence is invariant under local unitaries") {
    Rng rng(11);
    double worst = 0;
    for (int k = 0; k < 200; ++k) {
        BlochVector n = random_state(rng);
        BlochVector m = apply_local(random_su2(rng), random_su2(rng), n);
        worst = std::max(worst, std::abs(concurrence(n) - concurrence(m)));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("entropy in bits and partial traces") {
    BlochVector n;
    n.t(2, 2) = -1.0;  // eigenvalues {1/2, 1/2, 0, 0}
    CHECK(entropy(bloch_to_density(n)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
    CHECK(binary_entropy(0.0) == 0.0);

    // product state marginals
    BlochVector p;
    p.set_local_a(Vec3(0.3, 0, 0));
    p.set_local_b(Vec3(0, 0.4, 0));
    p.set_corr(Vec3(0.3, 0, 0) * Vec3(0, 0.4, 0).transpose());
    DensityMatrix rho = bloch_to_density(p);
    Eigen::Matrix2cd ra = partial_trace_B(rho), rb = partial_trace_A(rho);
    CHECK((ra * sigma(1)).trace().real() == doctest::Approx(0.3));
    CHECK((rb * sigma(2)).trace().real() == doctest::Approx(0.4));
    CHECK(entropy(ra) == doctest::Approx(binary_entropy(0.65)));
}

TEST_CASE("unitary evolution preserves purity") {
    Rng rng(3);
    for (int k = 0; k < 20; ++k) {
        BlochVector n = random_state(rng);
        double t = rng.uniform(0.0, 5.0);
        auto h = HamiltonianSpec::xy(0.7, -1.3, 0.2);
        BlochVector nt = unitary_propagate(h, n, t);
        CHECK(std::abs(purity(nt) - purity(n)) < 1e-12);
    }
}
