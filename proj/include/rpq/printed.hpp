#pragma once

#include "rpq/distributions.hpp"

namespace rpq::printed {

// Verbatim re-implementations of the paper's displayed formulas, used only
// by the audit to quantify how far each printed form sits from the
// self-consistent engine. Values are computed in log-sign form internally so
// extreme exponents degrade to 0/inf instead of NaN.

double pmf_t1(const DistributionSpec& spec, long long y1, long long y2);
double pmf_t2(const DistributionSpec& spec, long long x1, long long x2);
double pmf_nt1(const DistributionSpec& spec, long long w1, long long w2);
double pmf_nt2(const DistributionSpec& spec, long long v1, long long v2);

double negbin1(const DeformationScheme& s, long long nu, double a, long long u);
double negbin2(const DeformationScheme& s, long long nu, double b, long long t);

/// Total printed mass over the exact support (finite families) or a
/// truncated window (negative families).
double mass(const DistributionSpec& spec, long long window = 96);

// Printed covariance closed forms (the corollary displays as typeset).
double cov_t1(const DistributionSpec& spec);
double cov_nt1(const DistributionSpec& spec);
double cov_t2(const DistributionSpec& spec);
double cov_nt2(const DistributionSpec& spec);  // paper basis orientation

// Second-kind closed forms in the paper's basis orientation; they differ
// from the implemented ones only on mirrored schemes (BM, Quesne).
double fm_nt2_v2(const DistributionSpec& spec, long long m2);
double fm_nt2_v1_given(const DistributionSpec& spec, long long m1, long long v2);
double fm_nt2_weighted(const DistributionSpec& spec, long long m1);
double fm_nt2_joint_weighted(const DistributionSpec& spec, long long m1, long long m2);

} // namespace rpq::printed
