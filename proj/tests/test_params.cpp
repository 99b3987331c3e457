#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "solchaos/errors.hpp"
#include "solchaos/params.hpp"

using namespace solchaos;

namespace {

// Test constants for an attractive-interaction condensate (7Li-like numbers).
PhysicalParams lithium_like() {
    PhysicalParams p;
    p.mass = 7.016003436 * 1.66053906660e-27;
    p.omega_r = 2.0 * kPi * 710.0;
    p.a_s = -27.6 * 5.29177210903e-11;
    p.k0 = 2.0 * kPi / 1064e-9;
    p.V1 = 0.04 * recoil_energy(p.mass, p.k0);
    p.V2 = 0.08 * recoil_energy(p.mass, p.k0);
    p.gamma = GammaRatio::from_integer(2);
    p.v_L = 1e-3;
    p.alpha = 0.2 * p.k0;
    p.beta = 1.7 * recoil_energy(p.mass, p.k0) / kHbar;
    return p;
}

}

TEST_CASE("static-lattice reduction: v = 0, beta~ = 2, D = -2") {
    PhysicalParams p = lithium_like();
    p.v_L = 0.0;
    p.alpha = 0.0;
    p.beta = 2.0 * recoil_energy(p.mass, p.k0) / kHbar;
    const ReducedParams r = reduce_to_dimensionless(p);
    CHECK(r.d.v == 0.0);
    CHECK(r.d.alpha == 0.0);
    CHECK(r.d.beta == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(r.d.D == doctest::Approx(-2.0).epsilon(1e-14));
}

TEST_CASE("lattice depths scale by the recoil energy") {
    PhysicalParams p = lithium_like();
    p.V1 = 0.04 * recoil_energy(p.mass, p.k0);
    const ReducedParams r = reduce_to_dimensionless(p);
    CHECK(r.l.V1 == doctest::Approx(0.04).epsilon(1e-14));
    CHECK(r.l.V2 == doctest::Approx(0.08).epsilon(1e-14));
    CHECK(r.l.k == doctest::Approx(1.0).epsilon(1e-15)); // k_lattice defaults to k0
}

TEST_CASE("g1 for the 7Li-like constants matches an independent high-precision evaluation") {
    // Frozen from a 40-digit computation of 4 a_s/(k0 l_r^2) with
    // l_r = sqrt(hbar/(m omega_r)), hbar = (exact h)/2pi, and the constants above.
    const double expected = -0.00048756543824719601;
    const ReducedParams r = reduce_to_dimensionless(lithium_like());
    CHECK(r.d.g1 == doctest::Approx(expected).epsilon(1e-12));
    CHECK(r.d.g1 < 0.0);
}

TEST_CASE("round-trip through physical units recovers every field") {
    const PhysicalParams p = lithium_like();
    const ReducedParams r = reduce_to_dimensionless(p);
    const PhysicalParams back = rescale_to_physical(r.d, r.l, p.mass, p.omega_r, p.k0);
    CHECK(back.a_s == doctest::Approx(p.a_s).epsilon(1e-12));
    CHECK(back.V1 == doctest::Approx(p.V1).epsilon(1e-12));
    CHECK(back.V2 == doctest::Approx(p.V2).epsilon(1e-12));
    CHECK(back.v_L == doctest::Approx(p.v_L).epsilon(1e-12));
    CHECK(back.alpha == doctest::Approx(p.alpha).epsilon(1e-12));
    CHECK(back.beta == doctest::Approx(p.beta).epsilon(1e-12));
    CHECK(back.k_lattice == doctest::Approx(p.k0).epsilon(1e-12));
}

TEST_CASE("reduction rejects non-positive scale inputs, warns outside the soliton regime") {
    PhysicalParams p = lithium_like();
    p.mass = 0.0;
    CHECK_THROWS_AS(reduce_to_dimensionless(p), std::invalid_argument);
    p = lithium_like();
    p.omega_r = -1.0;
    CHECK_THROWS_AS(reduce_to_dimensionless(p), std::invalid_argument);
    p = lithium_like();
    p.k0 = 0.0;
    CHECK_THROWS_AS(reduce_to_dimensionless(p), std::invalid_argument);

    p = lithium_like();
    p.a_s = -p.a_s; // repulsive: valid input, warning only
    p.beta = -p.beta;
    const ReducedParams r = reduce_to_dimensionless(p);
    CHECK(r.warnings.size() == 2);
    CHECK(r.d.g1 > 0.0);
    CHECK(r.d.D > 0.0);
}

TEST_CASE("D from (v, alpha, beta) is bit-identical between field and formula") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const double v = u(rng), a = u(rng), b = u(rng);
        const DimensionlessParams d = DimensionlessParams::from_ansatz(v, a, b, -0.5);
        CHECK(d.D == v * v / 4.0 + v * a - b);
    }
    const DimensionlessParams d = DimensionlessParams::from_D(-2.0, -0.5);
    CHECK(d.D == d.v * d.v / 4.0 + d.v * d.alpha - d.beta);
}

TEST_CASE("the C != 0 branch is rejected at construction") {
    CHECK_THROWS_AS(DimensionlessParams::from_D(-2.0, -0.5, 0.1), std::invalid_argument);
    CHECK_NOTHROW(DimensionlessParams::from_D(-2.0, -0.5, 0.0));
}

TEST_CASE("duffing_rhs: equilibria and a hand-evaluated point") {
    const DimensionlessParams d = DimensionlessParams::from_D(-2.0, -0.5);
    const LatticeConfig l = make_lattice(0.04, 0.08, 1.0, GammaRatio::from_integer(2));

    // R = 0 is an equilibrium of the driven system (any xi, any drive).
    for (double xi : {0.0, 0.37, 2.0}) {
        const PhaseDerivative rhs = duffing_rhs({0.0, 1.3}, xi, d, l);
        CHECK(rhs.dR == 1.3);
        CHECK(rhs.dRp == 0.0);
    }

    // Undriven fixed point at R = 2: 2R - 0.5 R^3 = 0.
    const LatticeConfig undriven = make_lattice(0.0, 0.0, 1.0, GammaRatio::from_integer(2));
    const PhaseDerivative fixed = duffing_rhs({2.0, 0.0}, 0.0, d, undriven);
    CHECK(fixed.dR == 0.0);
    CHECK(fixed.dRp == doctest::Approx(0.0).epsilon(1e-15));

    // cos^2 terms are both 1 at xi = 0: R'' = 2 - 0.5 + 0.12 = 1.62.
    const PhaseDerivative driven = duffing_rhs({1.0, 0.0}, 0.0, d, l);
    CHECK(driven.dRp == doctest::Approx(1.62).epsilon(1e-14));
}

TEST_CASE("duffing_rhs is pi/k-periodic in xi for integer gamma") {
    const DimensionlessParams d = DimensionlessParams::from_D(-2.0, -0.5);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int gamma : {1, 2, 3, 5}) {
        const LatticeConfig l = make_lattice(0.04, 0.08, 1.3, GammaRatio::from_integer(gamma), 0.4);
        for (int i = 0; i < 50; ++i) {
            const PhaseState s{u(rng), u(rng)};
            const double xi = 5.0 * u(rng);
            const PhaseDerivative a = duffing_rhs(s, xi, d, l);
            const PhaseDerivative b = duffing_rhs(s, xi + kPi / l.k, d, l);
            CHECK(a.dRp == doctest::Approx(b.dRp).epsilon(1e-12));
        }
    }
}

TEST_CASE("gamma rationality flag") {
    const GammaRatio g = GammaRatio::from_fraction(4, 6);
    CHECK(g.p == 2);
    CHECK(g.q == 3);
    CHECK(g.value == doctest::Approx(2.0 / 3.0));
    CHECK_FALSE(g.is_integer());
    CHECK(GammaRatio::from_integer(2).is_integer());

    CHECK_THROWS_AS(GammaRatio::from_fraction(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(GammaRatio::from_fraction(0, 2), std::invalid_argument);

    // A float equal to a small fraction contradicts the irrational flag.
    CHECK_THROWS_AS(GammaRatio::irrational(2.0), std::invalid_argument);
    CHECK_THROWS_AS(GammaRatio::irrational(1.5), std::invalid_argument);
    CHECK_NOTHROW(GammaRatio::sqrt2());
    CHECK(GammaRatio::golden().value == doctest::Approx(1.6180339887498949));
}

TEST_CASE("lattice invariants") {
    CHECK_THROWS_AS(make_lattice(-0.1, 0.0, 1.0, GammaRatio::from_integer(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_lattice(0.1, -0.1, 1.0, GammaRatio::from_integer(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_lattice(0.1, 0.1, 0.0, GammaRatio::from_integer(2)),
                    std::invalid_argument);
}
