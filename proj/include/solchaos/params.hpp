#pragma once

#include <string>
#include <vector>

namespace solchaos {

inline constexpr double kPi = 3.14159265358979323846;

/// Reduced Planck constant, J s (SI-exact h / 2pi).
inline constexpr double kHbar = 6.62607015e-34 / (2.0 * kPi);

/// Recoil energy hbar^2 k0^2 / (2 m) of the reference wave vector.
double recoil_energy(double mass, double k0);

/** Wave-vector ratio of the two lattices with an explicit rationality flag.
 *
 *  Floating point cannot distinguish 2.0 from an irrational value, so all
 *  period-dependent code branches on the flag, never on a float test.
 *  Rational values are stored as coprime p/q.
 */
struct GammaRatio {
    double value = 2.0;
    bool rational = true;
    int p = 2, q = 1;     // valid only when rational
    std::string tag;      // optional symbolic tag for irrational values ("sqrt2", "golden")

    bool is_integer() const { return rational && q == 1; }

    static GammaRatio from_integer(int n);
    static GammaRatio from_fraction(int p, int q);
    /// Rejects values that coincide with a small fraction (inconsistent flag).
    static GammaRatio irrational(double value, std::string tag = "");
    static GammaRatio sqrt2();
    static GammaRatio golden();
};

/// SI-side inputs of the reduction. a_s < 0 is the soliton (attractive) regime.
struct PhysicalParams {
    double mass = 0;      // kg
    double omega_r = 0;   // rad/s, transverse trap frequency
    double a_s = 0;       // m, s-wave scattering length
    double k0 = 0;        // 1/m, reference wave vector (unit of wave vector)
    double k_lattice = 0; // 1/m, primary-lattice wave vector; 0 means "same as k0"
    double V1 = 0;        // J
    double V2 = 0;        // J
    GammaRatio gamma = GammaRatio::from_integer(2);
    double phi = 0;       // rad
    double v_L = 0;       // m/s, lattice velocity
    double alpha = 0;     // 1/m, ansatz constant
    double beta = 0;      // 1/s, ansatz constant
};

/** Dimensionless constants of the reduced traveling-wave equation.
 *
 *  D = v^2/4 + v*alpha - beta holds exactly for every construction path.
 *  The angular integration constant C is frozen at zero; the C != 0 branch
 *  is out of scope and the factories reject it.
 */
struct DimensionlessParams {
    double D = 0;
    double g1 = 0;
    double v = 0;
    double alpha = 0;
    double beta = 0;
    double C = 0;

    static DimensionlessParams from_ansatz(double v, double alpha, double beta,
                                           double g1, double C = 0.0);
    /// Direct-D construction (v = alpha = 0, beta = -D), e.g. for published parameter sets.
    static DimensionlessParams from_D(double D, double g1, double C = 0.0);
};

/// Dimensionless superlattice drive: V1 cos^2(k xi) + V2 cos^2(gamma k xi + phi).
struct LatticeConfig {
    double V1 = 0;
    double V2 = 0;
    double k = 1;
    GammaRatio gamma = GammaRatio::from_integer(2);
    double phi = 0;
};

LatticeConfig make_lattice(double V1, double V2, double k, GammaRatio gamma, double phi = 0.0);

/// Point in the equivalent phase space (R, R').
struct PhaseState {
    double R = 0;
    double Rp = 0;
};

/// (dR/dxi, dR'/dxi)
struct PhaseDerivative {
    double dR = 0;
    double dRp = 0;
};

struct ReducedParams {
    DimensionlessParams d;
    LatticeConfig l;
    std::vector<std::string> warnings; // D >= 0 or g1 >= 0: valid input, outside soliton regime
};

/** Nondimensionalize physical parameters:
 *  v = 2 m v_L/(hbar k0), beta~ = hbar beta/E_r0, alpha~ = alpha/k0,
 *  V~i = Vi/E_r0 with E_r0 = hbar^2 k0^2/(2m), g1 = 4 a_s/(k0 l_r^2),
 *  l_r = sqrt(hbar/(m omega_r)), D = v^2/4 + v alpha~ - beta~, k = k_lattice/k0.
 *  Rejects non-positive mass, omega_r, k0.
 */
ReducedParams reduce_to_dimensionless(const PhysicalParams& p);

/// Inverse of reduce_to_dimensionless given the same (mass, omega_r, k0).
PhysicalParams rescale_to_physical(const DimensionlessParams& d, const LatticeConfig& l,
                                   double mass, double omega_r, double k0);

/// V1 cos^2(k xi) + V2 cos^2(gamma k xi + phi)
double lattice_potential(double xi, const LatticeConfig& l);

/// Right-hand side of the driven Duffing equation,
/// R'' = g1 R^3 - D R + [V1 cos^2(k xi) + V2 cos^2(gamma k xi + phi)] R.
PhaseDerivative duffing_rhs(const PhaseState& s, double xi,
                            const DimensionlessParams& d, const LatticeConfig& l);

}
