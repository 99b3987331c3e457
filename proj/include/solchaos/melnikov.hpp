#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solchaos/params.hpp"

namespace solchaos {

/// Common prefactor eta = 2 k^2 pi / g1 of the Melnikov function.
double melnikov_eta(double k, double g1);

/** Analytic Melnikov function of the driven Duffing problem,
 *
 *  M(c0) = (2 k^2 pi/g1) [ V1 csch(k pi/sqrt(-D)) sin(2 c0 k)
 *                        + V2 gamma^2 csch(gamma k pi/sqrt(-D)) sin(2 c0 gamma k - 2 phi) ].
 *
 *  Simple zeros signal homoclinic chaos. Throws std::domain_error for D >= 0
 *  or g1 = 0.
 */
double melnikov(double c0, const DimensionlessParams& d, const LatticeConfig& l);

/** Independent oracle for `melnikov`: adaptive quadrature of int f eps dxi
 *  over [-L, L] around the soliton center. cutoff_L = 0 selects
 *  40/sqrt(-D) + |c0|. Throws QuadratureError when the tolerance cannot be met.
 */
double melnikov_numeric(double c0, const DimensionlessParams& d, const LatticeConfig& l,
                        double cutoff_L = 0.0, double quad_tol = 1e-12);

/// X1(c0) = sin(2 c0 k), the single-lattice zero factor.
double factor_X1(double c0, double k);

/** X_N(c0) = V1 csch(k pi/sqrt(-D)) + V2 N^2 csch(N k pi/sqrt(-D)) U_{N-1}(cos 2 c0 k)
 *  for phi = 0 and integer gamma = N >= 2 (U = Chebyshev second kind, equal to
 *  sin(2 N c0 k)/sin(2 c0 k) wherever the ratio is defined).
 *  eta X1 X_N reproduces M. Rejects non-integer gamma or phi != 0.
 */
double factor_XN(double c0, const DimensionlessParams& d, const LatticeConfig& l);

/// Period of M in c0: q pi / k for gamma = p/q (pi/k for integer gamma).
/// Throws NoPeriodError for irrational gamma.
double melnikov_period(const LatticeConfig& l);

enum class ZeroKind { Simple, Tangential };

struct MelnikovZero {
    double c0 = 0;
    ZeroKind kind = ZeroKind::Simple;
};

struct MelnikovProfile {
    DimensionlessParams d;
    LatticeConfig l;
    double period = 0;
    std::vector<std::pair<double, double>> samples; // (c0, M(c0))
    std::vector<MelnikovZero> zeros;                // strictly increasing, in [0, period)
    double max_abs_m = 0;
    double zero_tolerance = 0;
    int n() const { return static_cast<int>(zeros.size()); }
};

/** Sample M over one period, bracket/bisect sign changes and refine
 *  no-sign-change |M| minima, and count distinct zero locations.
 *
 *  Zeros closer than one sample spacing merge to a single location
 *  (the boundary's coinciding zeros count once). A zero is annotated
 *  Tangential when |M'| there is negligible against the profile's slope
 *  scale. zero_tolerance = 0 selects 1e-10 * max|M|.
 *  Requires >= 8 samples per shortest oscillation of M; irrational gamma
 *  raises NoPeriodError.
 */
MelnikovProfile count_zeros_per_period(const DimensionlessParams& d, const LatticeConfig& l,
                                       int resolution = 4096, double zero_tolerance = 0.0);

/// Region boundary V2b = (V1/4) cosh(k pi / sqrt(-D)) for gamma = 2.
double boundary_V2b(double k, double D, double V1);

enum class Region { A, B, Boundary };

struct RegionLabel {
    Region region = Region::B;
    double v2b = 0;
};

/// Classify against V2b with a relative tolerance band (default 1e-9).
/// A <=> n = 4, B/Boundary <=> n = 2 (cross-validated by count_zeros tests).
RegionLabel classify_region(const DimensionlessParams& d, const LatticeConfig& l,
                            double boundary_tolerance = 1e-9);

/// Chaos-probability prediction P = n P0 / 2 from the zero count.
double predicted_probability(const DimensionlessParams& d, const LatticeConfig& l, double P0);

struct RegionCell {
    double k = 0;
    double V2 = 0;
    int n = -1;
    std::optional<Region> region; // only for gamma = 2, phi = 0
    double v2b = 0;               // NaN when region is absent
    std::string error;            // per-cell error marker, empty on success
};

struct RegionMap {
    std::vector<double> k_axis;
    std::vector<double> v2_axis;
    std::vector<RegionCell> cells; // row-major: k index outer, V2 index inner
};

/// Per-cell zero counts (and A/B labels when gamma = 2, phi = 0) over a
/// (k, V2) grid; cell failures become error markers, never abort the map.
RegionMap region_map(const std::vector<double>& k_axis, const std::vector<double>& v2_axis,
                     const DimensionlessParams& d, double V1, const GammaRatio& gamma,
                     double phi = 0.0, int threads = 0, int resolution = 4096);

}
