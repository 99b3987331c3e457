#include "solchaos/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

#include "solchaos/errors.hpp"
#include "solchaos/melnikov.hpp"
#include "solchaos/parallel.hpp"

namespace solchaos {

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}

TrialRng::TrialRng(std::uint64_t master_seed, std::uint64_t trial_index) {
    // Decorrelate the (seed, index) pair before streaming.
    std::uint64_t s = master_seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ (trial_index * 0x9E3779B97F4A7C15ull + 0x632BE59BD9B4E019ull);
    (void)splitmix64(s);
    state_ = s;
}

std::uint64_t TrialRng::next_u64() { return splitmix64(state_); }

double TrialRng::uniform(double lo, double hi) {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

PhaseState sample_initial(std::uint64_t trial_index, std::uint64_t master_seed,
                          const IcRanges& ranges) {
    TrialRng rng(master_seed, trial_index);
    PhaseState s;
    s.R = rng.uniform(ranges.R_lo, ranges.R_hi);
    s.Rp = rng.uniform(ranges.Rp_lo, ranges.Rp_hi);
    return s;
}

std::pair<double, double> wilson_interval(int successes, int trials, double z) {
    if (trials <= 0) throw std::invalid_argument("wilson_interval needs trials >= 1");
    const double n = trials;
    const double p = successes / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

ChaosProbabilityEstimate estimate_probability(const DimensionlessParams& d,
                                              const LatticeConfig& l, int n_trials,
                                              std::uint64_t master_seed,
                                              const McPolicy& policy, bool keep_trials) {
    if (n_trials < 1) throw std::invalid_argument("n_trials must be >= 1");

    std::vector<TrialRecord> records(n_trials);
    parallel_for(static_cast<std::size_t>(n_trials), policy.threads, [&](std::size_t i) {
        TrialRecord& rec = records[i];
        rec.index = static_cast<int>(i);
        rec.ic = sample_initial(i, master_seed, policy.ic);
        const TrajectoryClass tc = classify_trajectory(rec.ic, d, l, policy.classify);
        rec.label = tc.label;
        rec.lambda = tc.lambda;
    });

    ChaosProbabilityEstimate est;
    est.n_trials = n_trials;
    est.master_seed = master_seed;
    est.policy = policy;
    for (const TrialRecord& rec : records) {
        switch (rec.label) {
            case TrajectoryLabel::Chaotic: ++est.n_chaotic; break;
            case TrajectoryLabel::Regular: ++est.n_regular; break;
            case TrajectoryLabel::Unbounded: ++est.n_unbounded; break;
        }
    }
    const int denom = policy.exclude_unbounded ? n_trials - est.n_unbounded : n_trials;
    est.p_hat = denom > 0 ? static_cast<double>(est.n_chaotic) / denom : 0.0;
    if (denom > 0) {
        const auto ci = wilson_interval(est.n_chaotic, denom);
        est.ci_low = ci.first;
        est.ci_high = ci.second;
    }
    if (keep_trials) est.trials = std::move(records);
    return est;
}

RegionComparison compare_regions(const DimensionlessParams& d, const LatticeConfig& l_a,
                                 const LatticeConfig& l_b, int n_trials,
                                 std::uint64_t master_seed, const McPolicy& policy) {
    RegionComparison cmp;
    cmp.a = estimate_probability(d, l_a, n_trials, master_seed, policy);
    cmp.b = estimate_probability(d, l_b, n_trials, master_seed, policy);

    cmp.ratio = cmp.b.p_hat > 0.0 ? cmp.a.p_hat / cmp.b.p_hat : std::nan("");
    cmp.ratio_lo = cmp.b.ci_high > 0.0 ? cmp.a.ci_low / cmp.b.ci_high : 0.0;
    cmp.ratio_hi = cmp.b.ci_low > 0.0 ? cmp.a.ci_high / cmp.b.ci_low
                                      : std::numeric_limits<double>::infinity();

    try {
        const int n_a = count_zeros_per_period(d, l_a).n();
        const int n_b = count_zeros_per_period(d, l_b).n();
        if (n_b > 0) {
            cmp.predicted_ratio = static_cast<double>(n_a) / n_b;
            cmp.consistent = *cmp.predicted_ratio >= cmp.ratio_lo &&
                             *cmp.predicted_ratio <= cmp.ratio_hi;
        }
    } catch (const NoPeriodError&) {
        // no analytic prediction for irrational gamma
    }
    return cmp;
}

}
