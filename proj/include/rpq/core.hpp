#pragma once

#include <cstdint>

#include "rpq/scheme.hpp"

namespace rpq {

/// choose-2 extended to all integers: x(x-1)/2. The negative families need
/// it at arguments below zero.
constexpr long long gbc2(long long x) { return x * (x - 1) / 2; }

/// Deformed number [n] = (phi1^n - phi2^n)/D; n*phi1^{n-1} in limit mode.
double number(const DeformationScheme& s, long long n);

/// [n]! = [1][2]...[n], empty product for n = 0.
double factorial(const DeformationScheme& s, long long n);

/// [n]! / ([k]! [n-k]!). Domain error unless 0 <= k <= n.
double binomial(const DeformationScheme& s, long long n, long long k);

/// [n]! / ([y1]! [y2]! [n-y1-y2]!). Domain error unless y1,y2 >= 0 and
/// y1 + y2 <= n.
double trinomial_coeff(const DeformationScheme& s, long long n, long long y1, long long y2);

/// Negative-family coefficient [n+w1+w2-1]! / ([w1]! [w2]! [n-1]!).
double neg_trinomial_coeff(const DeformationScheme& s, long long n, long long w1, long long w2);

/// Falling factorial [u]_r = [u][u-1]...[u-r+1]. Domain error if any index
/// u-i+1 is negative (the smallest index is u-r+1).
double falling(const DeformationScheme& s, long long u, long long r);

/// falling() with the paper's summation convention: 0 when u < r instead of
/// a domain error. Expectation transforms use this form.
double falling_or_zero(const DeformationScheme& s, long long u, long long r);

/// Shifted factorials (u (+) v)^n = prod_{i=1..n} (u phi1^{i-1} + v phi2^{i-1})
/// and the (-) analogue with subtraction.
double oplus_pow(const DeformationScheme& s, double u, double v, long long n);
double ominus_pow(const DeformationScheme& s, double u, double v, long long n);

/// Leading-base variants: the basis pair ordered as (lead, sub). Identical to
/// the plain forms when phi1 >= phi2.
double oplus_pow_lead(const DeformationScheme& s, double u, double v, long long n);
double ominus_pow_lead(const DeformationScheme& s, double u, double v, long long n);

/// Inverse-scheme falling factorial [u]_{r} at (1/p, 1/q), computed through
/// the inversion identity (phi1 phi2)^{-ur + C(r+1,2)} [u]_r. Agrees with
/// falling(s.inverse(), u, r) whenever D = phi1 - phi2 (BM/JS/CJ); for the
/// Quesne preset the two readings differ and the audit reports the gap.
double inv_falling(const DeformationScheme& s, long long u, long long r);
double inv_falling_or_zero(const DeformationScheme& s, long long u, long long r);

namespace detail {

/// Normalized bracket number (1 - lam^x)/(1 - lam), = x in limit mode.
/// number(x) = bracket_scale * lead^{x-1} * lam_number(x).
double lam_number(const DeformationScheme& s, long long x);

/// Normalized falling product prod_{i=1..r} lam_number(u-i+1); stays O(1)
/// for lam < 1 so large-support sums never overflow.
double lam_falling(const DeformationScheme& s, long long u, long long r);

/// prod_{i=0..k-1} (1 + c lam^i) and prod_{i=0..k-1} (1 - c lam^i).
double lam_oplus(const DeformationScheme& s, double c, long long k);
double lam_ominus(const DeformationScheme& s, double c, long long k);

/// Gaussian binomial in base lam: C_lam(n, k), bounded for lam < 1.
double lam_gauss_binom(const DeformationScheme& s, long long n, long long k);

} // namespace detail

} // namespace rpq
