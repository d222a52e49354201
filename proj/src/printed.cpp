#include "rpq/printed.hpp"

#include <cmath>

#include "rpq/errors.hpp"
#include "rpq/kahan.hpp"

namespace rpq::printed {

namespace {

// log-magnitude + sign accumulator for products of possibly huge factors
struct LogSign {
    double lg = 0.0;
    int sign = 1;
    void mul(double f) {
        if (f == 0.0) { sign = 0; return; }
        if (f < 0.0) { sign = -sign; f = -f; }
        lg += std::log(f);
    }
    void mul_pow(double base, double e) { lg += e * std::log(base); }
    void div(double f) {
        if (f == 0.0) { lg = INFINITY; return; }
        if (f < 0.0) { sign = -sign; f = -f; }
        lg -= std::log(f);
    }
    double value() const { return sign == 0 ? 0.0 : sign * std::exp(lg); }
};

void log_brackets(LogSign& acc, const DeformationScheme& s, long long n, int dir) {
    // multiplies acc by ([n]!)^dir
    for (long long k = 1; k <= n; ++k) {
        double v = number(s, k);
        if (dir > 0) acc.mul(v); else acc.div(v);
    }
}

void log_neg_trinom(LogSign& acc, const DeformationScheme& s, long long n, long long w1, long long w2) {
    log_brackets(acc, s, n + w1 + w2 - 1, +1);
    log_brackets(acc, s, w1, -1);
    log_brackets(acc, s, w2, -1);
    log_brackets(acc, s, n - 1, -1);
}

void log_oplus(LogSign& acc, const DeformationScheme& s, double u, double v, long long k, int dir) {
    for (long long i = 0; i < k; ++i) {
        double f = u * std::pow(s.phi1, double(i)) + v * std::pow(s.phi2, double(i));
        if (dir > 0) acc.mul(f); else acc.div(f);
    }
}

void log_ominus(LogSign& acc, const DeformationScheme& s, double u, double v, long long k, int dir) {
    for (long long i = 0; i < k; ++i) {
        double f = u * std::pow(s.phi1, double(i)) - v * std::pow(s.phi2, double(i));
        if (dir > 0) acc.mul(f); else acc.div(f);
    }
}

} // namespace

double pmf_t1(const DistributionSpec& spec, long long y1, long long y2) {
    const auto& s = spec.scheme;
    long long n = spec.n;
    LogSign acc;
    log_brackets(acc, s, n, +1);
    log_brackets(acc, s, y1, -1);
    log_brackets(acc, s, y2, -1);
    log_brackets(acc, s, n - y1 - y2, -1);
    acc.mul_pow(spec.a1, double(y1));
    acc.mul_pow(spec.a2, double(y2));
    acc.mul_pow(s.phi1, double(gbc2(n - y1) + gbc2(n - y2)));  // as typeset: n - y2, not n - y1 - y2
    acc.mul_pow(s.phi2, double(gbc2(y1) + gbc2(y2)));
    log_oplus(acc, s, 1.0, spec.a1, n, -1);
    log_oplus(acc, s, 1.0, spec.a2, n - y1, -1);
    return acc.value();
}

double pmf_t2(const DistributionSpec& spec, long long x1, long long x2) {
    const auto& s = spec.scheme;
    long long n = spec.n;
    LogSign acc;
    log_brackets(acc, s, n, +1);
    log_brackets(acc, s, x1, -1);
    log_brackets(acc, s, x2, -1);
    log_brackets(acc, s, n - x1 - x2, -1);
    acc.mul_pow(spec.a1, double(x1));
    acc.mul_pow(spec.a2, double(x2));
    log_ominus(acc, s, 1.0, spec.a1, n - x1, +1);
    log_ominus(acc, s, 1.0, spec.a2, n - x1 - x2, +1);
    return acc.value();
}

double pmf_nt1(const DistributionSpec& spec, long long w1, long long w2) {
    const auto& s = spec.scheme;
    long long n = spec.n;
    LogSign acc;
    log_neg_trinom(acc, s, n, w1, w2);
    acc.mul_pow(spec.a1, double(w1));
    acc.mul_pow(spec.a2, double(w2));
    acc.mul_pow(s.phi1, double(gbc2(n - w1) + gbc2(n - w2)));
    acc.mul_pow(s.phi2, double(gbc2(w1) + gbc2(w2)));
    log_oplus(acc, s, 1.0, spec.a1, n + w1 + w2, -1);
    log_oplus(acc, s, 1.0, spec.a2, n + w2, -1);
    return acc.value();
}

double pmf_nt2(const DistributionSpec& spec, long long v1, long long v2) {
    const auto& s = spec.scheme;
    long long n = spec.n;
    LogSign acc;
    log_neg_trinom(acc, s, n, v1, v2);
    acc.mul_pow(spec.a1, double(v1));
    acc.mul_pow(spec.a2, double(v2));
    log_ominus(acc, s, 1.0, spec.a1, n + v2, +1);
    log_ominus(acc, s, 1.0, spec.a2, n, +1);
    return acc.value();
}

double negbin1(const DeformationScheme& s, long long nu, double a, long long u) {
    LogSign acc;
    log_brackets(acc, s, nu + u - 1, +1);
    log_brackets(acc, s, u, -1);
    log_brackets(acc, s, nu - 1, -1);
    acc.mul_pow(a, double(u));
    acc.mul_pow(s.phi1, double(gbc2(nu - u)));
    acc.mul_pow(s.phi2, double(gbc2(u)));
    log_oplus(acc, s, 1.0, a, nu + u, -1);
    return acc.value();
}

double negbin2(const DeformationScheme& s, long long nu, double b, long long t) {
    LogSign acc;
    log_brackets(acc, s, nu + t - 1, +1);
    log_brackets(acc, s, t, -1);
    log_brackets(acc, s, nu - 1, -1);
    acc.mul_pow(b, double(t));
    log_ominus(acc, s, 1.0, b, nu, +1);
    return acc.value();
}

double mass(const DistributionSpec& spec, long long window) {
    KahanSum acc;
    if (!is_negative(spec.family)) {
        for (long long i = 0; i <= spec.n; ++i)
            for (long long j = 0; j + i <= spec.n; ++j)
                acc.add(spec.family == Family::T1 ? printed::pmf_t1(spec, i, j)
                                                  : printed::pmf_t2(spec, i, j));
        return acc.value();
    }
    for (long long i = 0; i <= window; ++i)
        for (long long j = 0; j <= window; ++j)
            acc.add(spec.family == Family::NT1 ? printed::pmf_nt1(spec, i, j)
                                               : printed::pmf_nt2(spec, i, j));
    return acc.value();
}

double cov_t1(const DistributionSpec& spec) {
    const auto& s = spec.scheme;
    long long n = spec.n;
    double f1 = s.phi1, f2 = s.phi2;
    return std::pow(f1, double(n - 1)) * spec.a1 * spec.a2 * number(s, n)
         * (number(s, n - 1) - number(s, n))
         / ((1.0 + spec.a1) * (1.0 + spec.a2)
            * (std::pow(f1, double(n - 1)) + spec.a1 * std::pow(f2, double(n - 1))));
}

double cov_nt1(const DistributionSpec& spec) {
    const auto& s = spec.scheme;
    return number(s, spec.n) * spec.a1 * spec.a2
         * (number(s, spec.n + 1) - number(s, spec.n));
}

double cov_t2(const DistributionSpec& spec) {
    const auto& s = spec.scheme;
    return number(s, spec.n) * spec.a1 * spec.a2
         * (number(s, spec.n - 1) - number(s, spec.n));
}

double cov_nt2(const DistributionSpec& spec) {
    const auto& s = spec.scheme;
    long long n = spec.n;
    auto dn = [&](long long k) {
        return std::pow(s.phi1, double(k)) - spec.a2 * std::pow(s.phi2, double(k));
    };
    return number(s, n) * spec.a1 * spec.a2 / dn(n)
         * (number(s, n + 1) / dn(n + 1) - number(s, n) / dn(n));
}

double fm_nt2_v2(const DistributionSpec& spec, long long m2) {
    const auto& s = spec.scheme;
    return std::pow(spec.a2, double(m2)) * falling(s, spec.n + m2 - 1, m2)
         / ominus_pow(s, std::pow(s.phi1, double(spec.n)), spec.a2 * std::pow(s.phi2, double(spec.n)), m2);
}

double fm_nt2_v1_given(const DistributionSpec& spec, long long m1, long long v2) {
    const auto& s = spec.scheme;
    long long k = spec.n + v2;
    return std::pow(spec.a1, double(m1)) * falling(s, k + m1 - 1, m1)
         / ominus_pow(s, std::pow(s.phi1, double(k)), spec.a1 * std::pow(s.phi2, double(k)), m1);
}

double fm_nt2_weighted(const DistributionSpec& spec, long long m1) {
    const auto& s = spec.scheme;
    return std::pow(spec.a1, double(m1)) * falling(s, spec.n + m1 - 1, m1)
         / ominus_pow(s, std::pow(s.phi1, double(spec.n)), spec.a2 * std::pow(s.phi2, double(spec.n)), m1);
}

double fm_nt2_joint_weighted(const DistributionSpec& spec, long long m1, long long m2) {
    const auto& s = spec.scheme;
    return std::pow(spec.a1, double(m1)) * std::pow(spec.a2, double(m2))
         * falling(s, spec.n + m1 + m2 - 1, m1 + m2)
         / ominus_pow(s, std::pow(s.phi1, double(spec.n)), spec.a2 * std::pow(s.phi2, double(spec.n)), m1 + m2);
}

} // namespace rpq::printed
