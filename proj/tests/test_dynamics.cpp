#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "solchaos/dynamics.hpp"
#include "solchaos/errors.hpp"

using namespace solchaos;
using oracles::fig2_lattice;
using oracles::fig2_params;

namespace {

double energy(const PhaseState& s, const DimensionlessParams& d) {
    return 0.5 * s.Rp * s.Rp + 0.5 * d.D * s.R * s.R - 0.25 * d.g1 * std::pow(s.R, 4);
}

LatticeConfig no_drive() { return make_lattice(0.0, 0.0, 1.0, GammaRatio::from_integer(2)); }

/// mean nearest-neighbour distance of section points, relative to the diameter
double mean_nn_ratio(const std::vector<PhaseState>& pts) {
    double r_lo = pts[0].R, r_hi = pts[0].R, p_lo = pts[0].Rp, p_hi = pts[0].Rp;
    for (const auto& p : pts) {
        r_lo = std::min(r_lo, p.R);
        r_hi = std::max(r_hi, p.R);
        p_lo = std::min(p_lo, p.Rp);
        p_hi = std::max(p_hi, p.Rp);
    }
    const double diameter = std::hypot(r_hi - r_lo, p_hi - p_lo);
    double sum = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double best = 1e300;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            best = std::min(best, std::hypot(pts[i].R - pts[j].R, pts[i].Rp - pts[j].Rp));
        }
        sum += best;
    }
    return sum / pts.size() / diameter;
}

}

TEST_CASE("undriven energy is conserved along the homoclinic orbit") {
    const DimensionlessParams d = fig2_params();
    const PhaseState s0{std::sqrt(8.0), 0.0}; // homoclinic peak, H = 0
    const double well_depth = std::fabs(d.D * d.D / (4.0 * d.g1));
    PhaseState s = s0;
    double xi = 0.0;
    for (int leg = 0; leg < 10; ++leg) {
        s = integrate(s, xi, xi + 10.0, d, no_drive());
        xi += 10.0;
        CHECK(std::fabs(energy(s, d) - energy(s0, d)) < 1e-9 * well_depth);
    }

    // a circulating orbit, H != 0, over the same span
    const PhaseState c0{0.0, 2.4};
    PhaseState c = integrate(c0, 0.0, 100.0, d, no_drive());
    CHECK(std::fabs(energy(c, d) - energy(c0, d)) < 1e-9 * std::fabs(energy(c0, d)));
}

TEST_CASE("the origin is a fixed point of the driven flow") {
    const DimensionlessParams d = fig2_params();
    const PhaseState s = integrate({0.0, 0.0}, 0.0, 50.0, d, fig2_lattice(0.08));
    CHECK(s.R == 0.0);
    CHECK(s.Rp == 0.0);
}

TEST_CASE("endpoint is tolerance-converged: tightening the control barely moves it") {
    const DimensionlessParams d = fig2_params();
    const LatticeConfig l = fig2_lattice(0.08);
    const PhaseState s0{1.5, 0.3};
    const double span = 10.0 * kPi;
    const PhaseState coarse = integrate(s0, 0.0, span, d, l, {1e-10, 1e-12, 1e3});
    const PhaseState fine = integrate(s0, 0.0, span, d, l, {0.5e-10, 0.5e-12, 1e3});
    CHECK(std::fabs(coarse.R - fine.R) < 1e-6);
    CHECK(std::fabs(coarse.Rp - fine.Rp) < 1e-6);
}

TEST_CASE("stroboscopic period honors the rationality flag") {
    CHECK(stroboscopic_period(fig2_lattice(0.08)) == doctest::Approx(kPi));
    CHECK(stroboscopic_period(make_lattice(0.04, 0.08, 2.0, GammaRatio::from_fraction(3, 2))) ==
          doctest::Approx(2.0 * kPi / 2.0));
    const LatticeConfig quasi = make_lattice(0.04, 0.08, 1.0, GammaRatio::sqrt2());
    CHECK(stroboscopic_period(quasi) == doctest::Approx(kPi)); // primary-lattice period
    CHECK(poincare_section({1.0, 0.0}, 10, 2, fig2_params(), quasi).quasiperiodic);
}

TEST_CASE("undriven center is a fixed point of the section") {
    const DimensionlessParams d = fig2_params();
    const PoincareSection sec = poincare_section({2.0, 0.0}, 200, 0, d, no_drive());
    REQUIRE(sec.points.size() == 201);
    for (const PhaseState& p : sec.points) {
        CHECK(std::fabs(p.R - 2.0) < 1e-8);
        CHECK(std::fabs(p.Rp) < 1e-8);
    }
}

TEST_CASE("section points equal direct integration at strobe times") {
    const DimensionlessParams d = fig2_params();
    const LatticeConfig l = fig2_lattice(0.01);
    const PhaseState s0{1.1, -0.4};
    const PoincareSection sec = poincare_section(s0, 40, 5, d, l);
    REQUIRE(sec.points.size() == 36);
    for (int j : {5, 17, 40}) {
        const PhaseState direct = integrate(s0, 0.0, j * sec.T, d, l);
        const PhaseState& strobed = sec.points[j - sec.drop];
        CHECK(strobed.R == doctest::Approx(direct.R).epsilon(1e-8));
        CHECK(strobed.Rp == doctest::Approx(direct.Rp).epsilon(1e-8));
    }
}

TEST_CASE("regular seeds trace invariant curves, chaotic seeds scatter") {
    const DimensionlessParams d = fig2_params();

    // deep inside the well under the region-B drive: a closed invariant curve
    const PoincareSection reg = poincare_section({1.2, 0.0}, 3000, 100, d, fig2_lattice(0.01));
    const double ratio_reg = mean_nn_ratio(reg.points);
    CHECK(ratio_reg < 0.004);
    CHECK(lyapunov({1.2, 0.0}, 1500, d, fig2_lattice(0.01), {}, 100) < 0.01);

    // near the separatrix under the region-A drive: scattered section, positive exponent
    const PoincareSection cha = poincare_section({0.1, 0.1}, 3000, 100, d, fig2_lattice(0.08));
    const double ratio_cha = mean_nn_ratio(cha.points);
    CHECK(ratio_cha > 0.006);
    CHECK(lyapunov({0.1, 0.1}, 1500, d, fig2_lattice(0.08), {}, 100) > 0.01);
}

TEST_CASE("lyapunov exponent of stable configurations sits at the noise floor") {
    const DimensionlessParams d = fig2_params();
    // undriven center
    CHECK(std::fabs(lyapunov({2.0, 0.0}, 500, d, no_drive(), {}, 50)) < 1e-3);
    // weakly driven continuation of the center: a stable period-1 orbit of the map
    CHECK(lyapunov({2.0, 0.0}, 1000, d, fig2_lattice(0.01), {}, 100) < 1e-3);
}

TEST_CASE("variational exponent agrees with a two-trajectory shadow estimate") {
    const DimensionlessParams d = fig2_params();
    const LatticeConfig l = fig2_lattice(0.08);
    const PhaseState s0{0.1, 0.1};
    const int drop = 100, iters = 800;
    const double T = stroboscopic_period(l);

    const double lam_var = lyapunov(s0, iters, d, l, {}, drop);

    // shadow: renormalize the companion back to d0 along the separation
    const double d0 = 1e-8;
    PhaseState a = s0, b{s0.R + d0, s0.Rp};
    double sum = 0.0;
    for (int j = 1; j <= iters; ++j) {
        a = integrate(a, (j - 1) * T, j * T, d, l);
        b = integrate(b, (j - 1) * T, j * T, d, l);
        const double dist = std::hypot(b.R - a.R, b.Rp - a.Rp);
        if (j > drop) sum += std::log(dist / d0);
        b.R = a.R + (b.R - a.R) * d0 / dist;
        b.Rp = a.Rp + (b.Rp - a.Rp) * d0 / dist;
    }
    const double lam_shadow = sum / ((iters - drop) * T);

    CHECK(lam_var > 0.01);
    CHECK(lam_shadow > 0.5 * lam_var);
    CHECK(lam_shadow < 2.0 * lam_var);
}

TEST_CASE("classification: equilibrium, regular, chaotic, unbounded") {
    const DimensionlessParams d = fig2_params();
    ClassifyPolicy policy;
    policy.n_iters = 1200;

    const TrajectoryClass origin = classify_trajectory({0.0, 0.0}, d, fig2_lattice(0.08), policy);
    CHECK(origin.label == TrajectoryLabel::Regular);
    CHECK(origin.stationary);
    CHECK(origin.lambda == 0.0);

    const TrajectoryClass reg = classify_trajectory({1.2, 0.0}, d, fig2_lattice(0.01), policy);
    CHECK(reg.label == TrajectoryLabel::Regular);
    CHECK_FALSE(reg.stationary);

    const TrajectoryClass cha = classify_trajectory({0.1, 0.1}, d, fig2_lattice(0.08), policy);
    CHECK(cha.label == TrajectoryLabel::Chaotic);
    CHECK(cha.lambda > policy.lambda_threshold);

    // repulsive interaction: the cubic term expels the trajectory
    const DimensionlessParams runaway = DimensionlessParams::from_D(-2.0, 0.5);
    const TrajectoryClass ub = classify_trajectory({1.0, 0.0}, runaway, fig2_lattice(0.01), policy);
    CHECK(ub.label == TrajectoryLabel::Unbounded);
    CHECK(std::isnan(ub.lambda));
    CHECK(ub.iterations_reached >= 1);
    CHECK_THROWS_AS(poincare_section({1.0, 0.0}, 100, 10, runaway, fig2_lattice(0.01)),
                    UnboundedError);
}

TEST_CASE("classification is deterministic run to run") {
    const DimensionlessParams d = fig2_params();
    ClassifyPolicy policy;
    policy.n_iters = 600;
    const TrajectoryClass a = classify_trajectory({0.3, -0.2}, d, fig2_lattice(0.08), policy);
    const TrajectoryClass b = classify_trajectory({0.3, -0.2}, d, fig2_lattice(0.08), policy);
    CHECK(a.label == b.label);
    CHECK(a.lambda == b.lambda);
    CHECK(a.tail_variance == b.tail_variance);
}

TEST_CASE("iteration bookkeeping is validated") {
    const DimensionlessParams d = fig2_params();
    CHECK_THROWS_AS(poincare_section({1.0, 0.0}, 100, 100, d, fig2_lattice(0.01)),
                    std::invalid_argument);
    CHECK_THROWS_AS(poincare_section({1.0, 0.0}, 100, -1, d, fig2_lattice(0.01)),
                    std::invalid_argument);
    CHECK_THROWS_AS(integrate({std::nan(""), 0.0}, 0.0, 1.0, d, fig2_lattice(0.01)),
                    std::invalid_argument);
}
