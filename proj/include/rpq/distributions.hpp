#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rpq/core.hpp"
#include "rpq/scheme.hpp"

namespace rpq {

enum class Family { T1, NT1, T2, NT2 };

std::string to_string(Family f);
Family family_from_string(const std::string& s);
bool is_negative(Family f);

/// One of the four bivariate trinomial families. a1/a2 are the paper's
/// (alpha1, alpha2) for the first-kind pair and (beta1, beta2) for the
/// second-kind pair, all constrained to (0,1).
struct DistributionSpec {
    Family family = Family::T1;
    DeformationScheme scheme;
    long long n = 1;
    double a1 = 0.5;
    double a2 = 0.5;

    static constexpr long long kMaxFiniteN = 32;  // direct-product evaluation limit

    void validate() const;
};

struct PmfEntry {
    long long y1;
    long long y2;
    double prob;
};

struct PmfTable {
    DistributionSpec spec;
    std::vector<PmfEntry> entries;  // first index major, second increasing
    bool truncated = false;
    double captured_mass = 0.0;
    long long truncation_bound = 0;
};

struct SampleBatch {
    DistributionSpec spec;
    std::uint64_t seed = 0;
    std::string convention;  // how draws were generated
    std::vector<std::pair<long long, long long>> draws;
};

// ---- univariate building blocks ------------------------------------------

/// First-kind deformed binomial pmf at top parameter nu.
double pmf_binom1(const DeformationScheme& s, long long nu, double a, long long x);

/// Second-kind deformed binomial pmf (leading-base orientation).
double pmf_binom2(const DeformationScheme& s, long long nu, double b, long long x);

/// Negative deformed binomial pmfs. These are the laws the bivariate
/// negative families chain together; negbin1 is exactly the law of the
/// success count until the nu-th failure in the trial-indexed Bernoulli
/// process with p_i = a sub^{i-1} / (lead^{i-1} + a sub^{i-1}).
double pmf_negbin1(const DeformationScheme& s, long long nu, double a, long long u);
double pmf_negbin2(const DeformationScheme& s, long long nu, double b, long long t);

/// Rows [0..count] of the negative binomial pmfs, computed by a stable
/// ratio recurrence (no large intermediate magnitudes).
std::vector<double> negbin1_row(const DeformationScheme& s, long long nu, double a, long long count);
std::vector<double> negbin2_row(const DeformationScheme& s, long long nu, double b, long long count);

// ---- joint pmfs ----------------------------------------------------------

/// Joint pmf for any family; std::nullopt signals an out-of-support query
/// (distinct from probability zero, so audits cannot mis-sum a support).
std::optional<double> pmf(const DistributionSpec& spec, long long i, long long j);

std::optional<double> pmf_t1(const DistributionSpec& spec, long long y1, long long y2);
std::optional<double> pmf_nt1(const DistributionSpec& spec, long long w1, long long w2);
std::optional<double> pmf_t2(const DistributionSpec& spec, long long x1, long long x2);
std::optional<double> pmf_nt2(const DistributionSpec& spec, long long v1, long long v2);

/// Chain-order marginal and conditional. For T1/T2 the chain conditions the
/// second index on the first; for NT1/NT2 the construction runs the other
/// way (the second count is drawn first), so there `marginal1` is the law of
/// the second index and `conditional2` the law of the first given it. In all
/// cases pmf(i,j) = marginal1(chain head) * conditional2(other | head).
std::optional<double> marginal1(const DistributionSpec& spec, long long idx);
std::optional<double> conditional2(const DistributionSpec& spec, long long idx, long long given);

/// Enumerate the support. Finite families: exact. Negative families: square
/// window [0,B]^2 found by doubling B until captured mass >= 1 - tail_tol
/// (cap 10^4, else truncation_error).
PmfTable support(const DistributionSpec& spec, double tail_tol);

/// Inverse-CDF sampling over the (possibly truncated) support table.
SampleBatch sample(const DistributionSpec& spec, long long count, std::uint64_t seed,
                   double tail_tol = 1e-8);

// ---- closed-form factorial moments and covariances ------------------------
//
// Values are the theorem closed forms; each equals the oracle expectation of
// the matching named transform (see rpq/transforms.hpp) to machine precision.

// first kind (T1)
double fm_t1_y1(const DistributionSpec& spec, long long m1);
double fm_t1_y2_given(const DistributionSpec& spec, long long m2, long long y1);
double fm_t1_y2(const DistributionSpec& spec, long long m2);
double fm_t1_joint(const DistributionSpec& spec, long long m1, long long m2);
double cov_t1(const DistributionSpec& spec);

// negative first kind (NT1)
double fm_nt1_w2(const DistributionSpec& spec, long long m2);
double fm_nt1_w1_given(const DistributionSpec& spec, long long m1, long long w2);
double fm_nt1_weighted(const DistributionSpec& spec, long long m1);
double fm_nt1_joint_weighted(const DistributionSpec& spec, long long m1, long long m2);
double cov_nt1(const DistributionSpec& spec);

// second kind (T2)
double fm_t2_x1(const DistributionSpec& spec, long long m1);
double fm_t2_x2_given(const DistributionSpec& spec, long long m2, long long x1);
double fm_t2_weighted(const DistributionSpec& spec, long long m2);
double fm_t2_joint_weighted(const DistributionSpec& spec, long long m1, long long m2);
double cov_t2(const DistributionSpec& spec);

// negative second kind (NT2)
double fm_nt2_v2(const DistributionSpec& spec, long long m2);
double fm_nt2_v1_given(const DistributionSpec& spec, long long m1, long long v2);
double fm_nt2_weighted(const DistributionSpec& spec, long long m1);
double fm_nt2_joint_weighted(const DistributionSpec& spec, long long m1, long long m2);
double cov_nt2(const DistributionSpec& spec);

} // namespace rpq
