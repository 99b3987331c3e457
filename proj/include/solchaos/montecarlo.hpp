#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "solchaos/dynamics.hpp"
#include "solchaos/params.hpp"

namespace solchaos {

/** Counter-based per-trial random stream: the state is derived from
 *  (master_seed, trial_index) alone, so any trial can be generated
 *  independently of the others and in any order.
 */
class TrialRng {
public:
    TrialRng(std::uint64_t master_seed, std::uint64_t trial_index);
    std::uint64_t next_u64();
    double uniform(double lo, double hi); // in [lo, hi)
private:
    std::uint64_t state_;
};

/// Initial-condition box; defaults follow the reference numerical experiment.
struct IcRanges {
    double R_lo = -2.1, R_hi = 2.1;
    double Rp_lo = -2.2, Rp_hi = 2.2;
};

/// Uniform draw of (R, R') for one trial.
PhaseState sample_initial(std::uint64_t trial_index, std::uint64_t master_seed,
                          const IcRanges& ranges = {});

struct McPolicy {
    ClassifyPolicy classify;
    IcRanges ic;
    bool exclude_unbounded = false; // drop Unbounded from numerator and denominator
    int threads = 0;                // 0 = resolve from environment / hardware
};

struct TrialRecord {
    int index = 0;
    PhaseState ic;
    TrajectoryLabel label = TrajectoryLabel::Regular;
    double lambda = 0;
};

struct ChaosProbabilityEstimate {
    int n_trials = 0;
    int n_chaotic = 0;
    int n_regular = 0;
    int n_unbounded = 0;
    double p_hat = 0;
    double ci_low = 0, ci_high = 0; // 95% Wilson interval
    std::uint64_t master_seed = 0;
    McPolicy policy;
    std::vector<TrialRecord> trials; // populated only when requested
};

/// 95% Wilson score interval for `successes` out of `trials`.
std::pair<double, double> wilson_interval(int successes, int trials,
                                          double z = 1.959963984540054);

/** Estimate the chaos probability from n_trials random initial conditions.
 *  Deterministic for fixed (seed, policy, params) regardless of thread count;
 *  Unbounded trials count as non-chaotic unless policy.exclude_unbounded.
 */
ChaosProbabilityEstimate estimate_probability(const DimensionlessParams& d,
                                              const LatticeConfig& l, int n_trials,
                                              std::uint64_t master_seed,
                                              const McPolicy& policy = {},
                                              bool keep_trials = false);

struct RegionComparison {
    ChaosProbabilityEstimate a;
    ChaosProbabilityEstimate b;
    double ratio = 0; // NaN when p_b = 0 (interval still reported)
    double ratio_lo = 0, ratio_hi = 0;
    std::optional<double> predicted_ratio; // n_a / n_b when both periods exist
    bool consistent = false;               // predicted ratio inside the ratio interval
};

/// Paired comparison of two lattice configurations with a shared seed.
RegionComparison compare_regions(const DimensionlessParams& d, const LatticeConfig& l_a,
                                 const LatticeConfig& l_b, int n_trials,
                                 std::uint64_t master_seed, const McPolicy& policy = {});

}
