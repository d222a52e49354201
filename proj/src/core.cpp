#include "rpq/core.hpp"

#include <cmath>

#include "rpq/errors.hpp"

namespace rpq {

double number(const DeformationScheme& s, long long n) {
    if (s.limit_mode)
        return static_cast<double>(n) * std::pow(s.phi1, static_cast<double>(n - 1));
    return (std::pow(s.phi1, static_cast<double>(n)) - std::pow(s.phi2, static_cast<double>(n))) / s.D;
}

double factorial(const DeformationScheme& s, long long n) {
    if (n < 0) throw validation_error("factorial: n must be nonnegative");
    double r = 1.0;
    for (long long k = 1; k <= n; ++k) r *= number(s, k);
    return r;
}

double binomial(const DeformationScheme& s, long long n, long long k) {
    if (k < 0 || n < 0 || k > n) throw validation_error("binomial: need 0 <= k <= n");
    // ratio form keeps intermediate magnitudes near the result
    double r = 1.0;
    long long kk = (k > n - k) ? n - k : k;
    for (long long i = 1; i <= kk; ++i) r *= number(s, n - kk + i) / number(s, i);
    return r;
}

double trinomial_coeff(const DeformationScheme& s, long long n, long long y1, long long y2) {
    if (y1 < 0 || y2 < 0 || y1 + y2 > n)
        throw validation_error("trinomial_coeff: need y1,y2 >= 0 and y1+y2 <= n");
    return binomial(s, n, y1) * binomial(s, n - y1, y2);
}

double neg_trinomial_coeff(const DeformationScheme& s, long long n, long long w1, long long w2) {
    if (n < 1 || w1 < 0 || w2 < 0)
        throw validation_error("neg_trinomial_coeff: need n >= 1 and w1,w2 >= 0");
    return binomial(s, n + w2 - 1, w2) * binomial(s, n + w1 + w2 - 1, w1);
}

double falling(const DeformationScheme& s, long long u, long long r) {
    if (r < 0) throw validation_error("falling: order must be nonnegative");
    if (r > 0 && u - r + 1 < 0)
        throw validation_error("falling: index u-r+1 below zero");
    double x = 1.0;
    for (long long i = 1; i <= r; ++i) x *= number(s, u - i + 1);
    return x;
}

double falling_or_zero(const DeformationScheme& s, long long u, long long r) {
    if (u < r) return 0.0;  // a [0] factor appears; sums start at u = r
    return falling(s, u, r);
}

namespace {

double shifted_product(double a, double b, double u, double v, long long n, bool plus) {
    double x = 1.0;
    double pa = 1.0, pb = 1.0;
    for (long long i = 0; i < n; ++i) {
        x *= plus ? (u * pa + v * pb) : (u * pa - v * pb);
        pa *= a;
        pb *= b;
    }
    return x;
}

} // namespace

double oplus_pow(const DeformationScheme& s, double u, double v, long long n) {
    if (n < 0) throw validation_error("oplus_pow: n must be nonnegative");
    return shifted_product(s.phi1, s.phi2, u, v, n, true);
}

double ominus_pow(const DeformationScheme& s, double u, double v, long long n) {
    if (n < 0) throw validation_error("ominus_pow: n must be nonnegative");
    return shifted_product(s.phi1, s.phi2, u, v, n, false);
}

double oplus_pow_lead(const DeformationScheme& s, double u, double v, long long n) {
    if (n < 0) throw validation_error("oplus_pow_lead: n must be nonnegative");
    return shifted_product(s.lead(), s.sub(), u, v, n, true);
}

double ominus_pow_lead(const DeformationScheme& s, double u, double v, long long n) {
    if (n < 0) throw validation_error("ominus_pow_lead: n must be nonnegative");
    return shifted_product(s.lead(), s.sub(), u, v, n, false);
}

double inv_falling(const DeformationScheme& s, long long u, long long r) {
    if (r < 0) throw validation_error("inv_falling: order must be nonnegative");
    if (r > 0 && u - r + 1 < 0)
        throw validation_error("inv_falling: index u-r+1 below zero");
    double pp = s.phi1 * s.phi2;
    return std::pow(pp, static_cast<double>(-u * r + gbc2(r + 1))) * falling(s, u, r);
}

double inv_falling_or_zero(const DeformationScheme& s, long long u, long long r) {
    if (u < r) return 0.0;
    return inv_falling(s, u, r);
}

namespace detail {

double lam_number(const DeformationScheme& s, long long x) {
    if (s.limit_mode) return static_cast<double>(x);
    double lam = s.lam();
    return (1.0 - std::pow(lam, static_cast<double>(x))) / (1.0 - lam);
}

double lam_falling(const DeformationScheme& s, long long u, long long r) {
    double x = 1.0;
    for (long long i = 1; i <= r; ++i) x *= lam_number(s, u - i + 1);
    return x;
}

double lam_oplus(const DeformationScheme& s, double c, long long k) {
    double x = 1.0, l = 1.0;
    double lam = s.lam();
    for (long long i = 0; i < k; ++i) {
        x *= 1.0 + c * l;
        l *= lam;
    }
    return x;
}

double lam_ominus(const DeformationScheme& s, double c, long long k) {
    double x = 1.0, l = 1.0;
    double lam = s.lam();
    for (long long i = 0; i < k; ++i) {
        x *= 1.0 - c * l;
        l *= lam;
    }
    return x;
}

double lam_gauss_binom(const DeformationScheme& s, long long n, long long k) {
    if (k < 0 || k > n) return 0.0;
    if (s.limit_mode) {
        double r = 1.0;
        for (long long i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / static_cast<double>(i);
        return r;
    }
    double lam = s.lam();
    double r = 1.0;
    for (long long i = 1; i <= k; ++i)
        r *= (1.0 - std::pow(lam, static_cast<double>(n - k + i))) / (1.0 - std::pow(lam, static_cast<double>(i)));
    return r;
}

} // namespace detail

} // namespace rpq
