#pragma once

#include <array>
#include <cstdint>

#include "rpq/scheme.hpp"

namespace rpq::verify {

/// Index conventions for the success probability p_i of the Bernoulli
/// process behind the first-kind negative binomial: i counts all trials, or
/// i = 1 + failures so far.
enum class IndexConvention { TrialIndex, FailureCount };

struct McResult {
    IndexConvention convention = IndexConvention::TrialIndex;
    long long samples = 0;
    double tv_distance = 0.0;
    double chi_square = 0.0;
    std::uint64_t seed = 0;
};

/// Simulates successes-until-nth-failure under both index conventions with
/// p_i = a sub^{i-1} / (lead^{i-1} + a sub^{i-1}) and compares each empirical
/// law against the implemented negative binomial of the first kind. The
/// matching convention is the one whose TV distance vanishes with samples.
std::array<McResult, 2> mc_negbin1(const DeformationScheme& scheme, long long n, double a,
                                   long long samples, std::uint64_t seed);

} // namespace rpq::verify
