#pragma once

#include <string>

#include "rpq/distributions.hpp"

namespace rpq::verify {

/// Named expectation transforms. Each theorem closed form equals the oracle
/// expectation of its `Theorem` transform; the `Printed` reading drops the
/// basis-power weights exactly as the paper's displays do, and is evaluated
/// by the audit to document the discrepancy.
enum class Reading { Theorem, Printed };

/// Which inverse-scheme brackets the first-kind negative moments use.
/// Identity015 defines [u]_{r,inv} through the inversion identity
/// (phi1 phi2)^{-ur + C(r+1,2)} [u]_r and keeps every preset consistent;
/// InverseScheme re-evaluates the falling factorial on the inverse preset
/// (identical for BM/JS/CJ, different for Quesne).
enum class InvBrackets { Identity015, InverseScheme };

enum class TransformKind {
    ConstantOne,
    FallingY1,        // marginal falling factorial of the first index
    FallingY2,        // marginal falling factorial of the second index
    FallingProduct,   // joint product with the theorem's closed-form scaling
    InvFallingW1,     // NT1: inverse-bracket falling of the first index
    InvFallingW2,     // NT1: inverse-bracket falling of the second index
    OplusWeighted,    // NT1: ratio transform of (ntfk3)
    OminusWeighted,   // T2 (tsk4) / NT2 (ntsk4) ratio transforms
    OminusWeightedAlt // NT2: the theorem's printed -m2 exponent reading
};

struct Transform {
    TransformKind kind = TransformKind::ConstantOne;
    long long m1 = 0;
    long long m2 = 0;
    Reading reading = Reading::Theorem;
    InvBrackets brackets = InvBrackets::Identity015;
};

/// Pointwise transform value at a support point (i, j) of spec's family.
double transform_value(const DistributionSpec& spec, const Transform& t, long long i, long long j);

struct ExpectationQuery {
    DistributionSpec spec;
    Transform transform;
    double tail_tol = 1e-10;
};

/// Direct-summation oracle: Kahan sum of transform * pmf over the support
/// table in a fixed order. Deterministic for fixed inputs.
double expect(const ExpectationQuery& query);
double expect(const PmfTable& table, const Transform& t);

/// Conditional-law oracles for the conditional theorems (tfk2, tsk3, ntfk2,
/// ntsk3): direct sums over the univariate conditional distribution.
double expect_conditional(const DistributionSpec& spec, const Transform& t, long long given,
                          double tail_tol = 1e-10);

/// Oracle covariance of the two marginal order-1 theorem transforms of the
/// family's corollary. cov_* closed forms match these.
double cov_oracle(const PmfTable& table, Reading reading = Reading::Theorem);

} // namespace rpq::verify
