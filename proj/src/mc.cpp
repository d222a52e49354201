#include "rpq/mc.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "rpq/distributions.hpp"
#include "rpq/errors.hpp"

namespace rpq::verify {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + salt * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

McResult run_convention(const DeformationScheme& s, long long n, double a,
                        long long samples, std::uint64_t seed, IndexConvention conv) {
    std::mt19937_64 rng(mix_seed(seed, conv == IndexConvention::TrialIndex ? 1 : 2));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double lam = s.lam();

    std::vector<long long> counts;
    long long max_u = 0;
    for (long long k = 0; k < samples; ++k) {
        long long successes = 0, failures = 0;
        while (failures < n) {
            long long i = conv == IndexConvention::TrialIndex ? successes + failures + 1
                                                              : failures + 1;
            double w = a * std::pow(lam, double(i - 1));
            double pi = w / (1.0 + w);
            if (unif(rng) < pi)
                ++successes;
            else
                ++failures;
        }
        if (successes >= static_cast<long long>(counts.size()))
            counts.resize(size_t(successes) + 1, 0);
        ++counts[size_t(successes)];
        max_u = std::max(max_u, successes);
    }

    // reference law: implemented negative binomial of the first kind
    long long U = max_u + 64;
    auto law = negbin1_row(s, n, a, U);

    McResult res;
    res.convention = conv;
    res.samples = samples;
    res.seed = seed;

    double tv = 0.0;
    for (long long u = 0; u <= U; ++u) {
        double emp = u < static_cast<long long>(counts.size())
                         ? double(counts[size_t(u)]) / double(samples) : 0.0;
        tv += std::abs(emp - law[size_t(u)]);
    }
    res.tv_distance = 0.5 * tv;

    // chi-square with cells pooled to expected count >= 5
    double chi = 0.0, obs_pool = 0.0, exp_pool = 0.0;
    for (long long u = 0; u <= U; ++u) {
        double expd = law[size_t(u)] * double(samples);
        double obs = u < static_cast<long long>(counts.size()) ? double(counts[size_t(u)]) : 0.0;
        obs_pool += obs;
        exp_pool += expd;
        if (exp_pool >= 5.0) {
            chi += (obs_pool - exp_pool) * (obs_pool - exp_pool) / exp_pool;
            obs_pool = exp_pool = 0.0;
        }
    }
    if (exp_pool > 0.0)
        chi += (obs_pool - exp_pool) * (obs_pool - exp_pool) / exp_pool;
    res.chi_square = chi;
    return res;
}

} // namespace

std::array<McResult, 2> mc_negbin1(const DeformationScheme& scheme, long long n, double a,
                                   long long samples, std::uint64_t seed) {
    if (samples < 10000) throw validation_error("mc_negbin1: samples must be >= 10^4");
    if (n < 1) throw validation_error("mc_negbin1: n must be >= 1");
    if (!(a > 0.0 && a < 1.0)) throw validation_error("mc_negbin1: a must lie in (0,1)");
    return {run_convention(scheme, n, a, samples, seed, IndexConvention::TrialIndex),
            run_convention(scheme, n, a, samples, seed, IndexConvention::FailureCount)};
}

} // namespace rpq::verify
