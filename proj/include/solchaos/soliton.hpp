#pragma once

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "solchaos/params.hpp"

namespace solchaos {

/** Perturbative chaotic-soliton construction around the homoclinic orbit.
 *
 *  Requires D < 0 and g1 < 0 so that the zeroth-order sech solution and the
 *  fundamental solutions of the linearized equation are real.
 */
struct SolitonConfig {
    DimensionlessParams d;
    LatticeConfig l;
    double c0 = 0;  // integration constant fixing the soliton center at xi = -c0
    double xi0 = 0; // combined initial phase k0 (x0 + v_L t0)
};

SolitonConfig make_soliton_config(const DimensionlessParams& d, const LatticeConfig& l,
                                  double c0 = 0.0, double xi0 = 0.0);

/// Peak amplitude sqrt(2 D / g1) of the homoclinic solution.
double soliton_peak(const DimensionlessParams& d);

/// Zeroth-order homoclinic (bright-soliton) amplitude
/// R0(xi) = sqrt(2D/g1) sech(sqrt(-D) (xi + c0)).
double r0(double xi, const SolitonConfig& cfg);

/** Recover c0 from an on-orbit condition R0(xi0) = R_at_xi0 with the branch
 *  chosen so that sign(R0'(xi0)) = slope_sign (ignored at the peak).
 *  Throws OffOrbitError when R_at_xi0 is outside (0, peak].
 */
double c0_from_condition(double xi0, double R_at_xi0, int slope_sign,
                         const DimensionlessParams& d);

/// First fundamental solution f = dR0/dxi of the linearized equation.
double f_solution(double xi, const SolitonConfig& cfg);

/** Second fundamental solution h = f * integral(f^-2), normalized so the
 *  Wronskian f h' - f' h is exactly 1. Closed form (regular at the peak):
 *  h = -sqrt(-2 g1)/(8 (-D)^(3/2)) sech(u) (6 u tanh u + 2 sinh^2 u - 4),
 *  u = sqrt(-D)(xi + c0).
 */
double h_solution(double xi, const SolitonConfig& cfg);

/// Drive term of the first-order equation,
/// epsilon(xi) = [V1 cos^2(k xi) + V2 cos^2(gamma k xi + phi)] R0(xi).
double epsilon_drive(double xi, const SolitonConfig& cfg);

struct R1Options {
    double cutoff_L = 0;  // lower integration limit P = -L; 0 = auto 40/sqrt(-D)
    double q_ref = std::nan(""); // reference Q of the second integral; NaN = -c0 (soliton peak)
    double quad_tol = 1e-12;
};

/// Default cutoff 40/sqrt(-D); the sech tail is below 1e-17 there.
double default_cutoff(const DimensionlessParams& d);

/** First-order correction by quadrature,
 *  R1(xi) = h(xi) int_P^xi f eps - f(xi) int_Q^xi h eps,  P = -L, Q = -c0.
 *  Bounded as xi -> +-inf exactly when the Melnikov function vanishes at c0.
 */
double r1(double xi, const SolitonConfig& cfg, const R1Options& opt = {});

/// Boundedness functionals (I+, I-) with P = -L:
/// I+- = int_P^(+-L) f eps, so I- = 0 and I+ - I- equals the Melnikov integral.
std::pair<double, double> boundedness_I(const SolitonConfig& cfg, double L,
                                        double quad_tol = 1e-12);

/// Map from SI (x, t) to the dimensionless frame: x~ = k0 x, t~ = time_scale t
/// with time_scale = E_r0/hbar. Defaults of 1 accept dimensionless input directly.
struct WaveScale {
    double k0 = 1.0;
    double time_scale = 1.0;
};

/** Assembled wavefunction Psi = R(xi) exp(i [theta(xi) + alpha x~ + beta t~]),
 *  xi = x~ + v t~, theta(xi) = -(v/2 + alpha) xi + theta_offset (C = 0 phase),
 *  R = R0 + R1.
 */
std::complex<double> wavefunction(double x, double t, const SolitonConfig& cfg,
                                  const WaveScale& scale = {}, double theta_offset = 0.0,
                                  const R1Options& opt = {});

struct WaveSample {
    double xi = 0;
    double R0 = 0;
    double R1 = 0;
    double R = 0;
    double theta = 0;
    double psi_re = 0;
    double psi_im = 0;
    double perturb_ratio = 0; // |R1|/|R0|, perturbative-validity indicator
};

/// Snapshot profile at t~ = 0 (so x~ = xi); R1 integrals advance incrementally
/// across the grid.
std::vector<WaveSample> wave_profile(const SolitonConfig& cfg, double xi_lo, double xi_hi,
                                     int n_points, double theta_offset = 0.0,
                                     const R1Options& opt = {});

}
