#include "rpq/verify.hpp"

#include <cmath>

#include "rpq/errors.hpp"
#include "rpq/kahan.hpp"

namespace rpq::verify {

namespace {

double ipow(double b, long long e) { return std::pow(b, double(e)); }

// prod_{k=1..m} (1 +- c * lam^{e0+k-1}); e0 may be negative only at points
// where the transform already vanished.
double lam_shift_prod(const DeformationScheme& s, double c, long long e0, long long m, bool plus) {
    double lam = s.lam();
    double x = 1.0;
    for (long long k = 0; k < m; ++k) {
        double l = ipow(lam, e0 + k);
        x *= plus ? (1.0 + c * l) : (1.0 - c * l);
    }
    return x;
}

double inv_brackets_or_zero(const DistributionSpec& spec, InvBrackets mode, long long u, long long m) {
    if (u < m) return 0.0;
    if (mode == InvBrackets::Identity015) return inv_falling(spec.scheme, u, m);
    return falling(spec.scheme.inverse(), u, m);
}

// NT1 theorem transforms in reduced leading-base form: bounded lambda-falling
// times small constant powers, so large supports never overflow.
double nt1_w_marginal(const DistributionSpec& spec, InvBrackets mode, long long w, long long m) {
    const auto& s = spec.scheme;
    if (w < m) return 0.0;
    double A = s.lead();
    double base = ipow(A, m * (spec.n - 2) + gbc2(m + 1));
    if (mode == InvBrackets::Identity015) {
        double lam = s.lam();
        return std::pow(s.bracket_scale(), double(m)) * base
             * ipow(lam, -w * m + gbc2(m + 1)) * detail::lam_falling(s, w, m);
    }
    // inverse-preset brackets: direct product (supports are small for NT1)
    return ipow(A, m * (w + spec.n - 2)) * falling(s.inverse(), w, m);
}

} // namespace

double transform_value(const DistributionSpec& spec, const Transform& t, long long i, long long j) {
    const auto& s = spec.scheme;
    long long n = spec.n;
    double A = s.lead();
    double c = s.bracket_scale();
    bool printed = t.reading == Reading::Printed;

    switch (spec.family) {
    case Family::T1: {
        double f1 = s.phi1;
        switch (t.kind) {
        case TransformKind::ConstantOne: return 1.0;
        case TransformKind::FallingY1: {
            double f = falling_or_zero(s, i, t.m1);
            return printed ? f : ipow(f1, (n - i) * t.m1) * f;
        }
        case TransformKind::FallingY2: {
            double f = falling_or_zero(s, j, t.m2);
            return printed ? f : ipow(f1, (n - j) * t.m2) * f;
        }
        case TransformKind::FallingProduct: {
            double f = falling_or_zero(s, i, t.m1) * falling_or_zero(s, j, t.m2);
            return printed ? f : ipow(f1, (n - i) * t.m1 + (n - j) * t.m2 - t.m1 * t.m2) * f;
        }
        default: break;
        }
        break;
    }
    case Family::T2: {
        switch (t.kind) {
        case TransformKind::ConstantOne: return 1.0;
        case TransformKind::FallingY1: {
            double f = falling_or_zero(s, i, t.m1);
            return printed ? f : ipow(A, (n - i) * t.m1) * f;
        }
        case TransformKind::OminusWeighted: {
            double f = falling_or_zero(s, j, t.m2);
            if (f == 0.0) return 0.0;
            if (printed)
                return f / ominus_pow(s, ipow(s.phi1, n - t.m2 - i),
                                      spec.a1 * ipow(s.phi2, n - t.m2 - i), t.m2);
            return ipow(A, t.m2 * (n - j)) * f
                 / lam_shift_prod(s, spec.a1, n - t.m2 - i, t.m2, false);
        }
        case TransformKind::FallingProduct: {
            double f = falling_or_zero(s, i, t.m1) * falling_or_zero(s, j, t.m2);
            if (f == 0.0) return 0.0;
            if (printed)
                return f / ominus_pow(s, ipow(s.phi1, n - t.m2 - i),
                                      spec.a1 * ipow(s.phi2, n - t.m2 - i), t.m2);
            return ipow(A, (n - i) * t.m1 + (n - j) * t.m2 - t.m1 * t.m2) * f
                 / lam_shift_prod(s, spec.a1, n - t.m2 - i, t.m2, false);
        }
        default: break;
        }
        break;
    }
    case Family::NT1: {
        switch (t.kind) {
        case TransformKind::ConstantOne: return 1.0;
        case TransformKind::InvFallingW1:
            if (printed) return inv_brackets_or_zero(spec, t.brackets, i, t.m1);
            return nt1_w_marginal(spec, t.brackets, i, t.m1);
        case TransformKind::InvFallingW2:
            if (printed) return inv_brackets_or_zero(spec, t.brackets, j, t.m2);
            return nt1_w_marginal(spec, t.brackets, j, t.m2);
        case TransformKind::OplusWeighted: {
            if (printed) {
                double f = inv_brackets_or_zero(spec, t.brackets, i, t.m1);
                if (f == 0.0) return 0.0;
                return f / oplus_pow(s, ipow(s.phi1, n + j), spec.a2 * ipow(s.phi2, n + j), t.m1);
            }
            double f = nt1_w_marginal(spec, t.brackets, i, t.m1);
            if (f == 0.0) return 0.0;
            return f / lam_shift_prod(s, spec.a2, n + j, t.m1, true);
        }
        case TransformKind::FallingProduct: {  // joint of (ntfk4)
            if (printed) {
                double f = inv_brackets_or_zero(spec, t.brackets, i, t.m1)
                         * inv_brackets_or_zero(spec, t.brackets, j, t.m2);
                if (f == 0.0) return 0.0;
                return f / oplus_pow(s, ipow(s.phi1, n + j), spec.a2 * ipow(s.phi2, n + j), t.m1);
            }
            double f = nt1_w_marginal(spec, t.brackets, i, t.m1)
                     * nt1_w_marginal(spec, t.brackets, j, t.m2);
            if (f == 0.0) return 0.0;
            return ipow(A, t.m1 * t.m2) * f / lam_shift_prod(s, spec.a2, n + j, t.m1, true);
        }
        default: break;
        }
        break;
    }
    case Family::NT2: {
        switch (t.kind) {
        case TransformKind::ConstantOne: return 1.0;
        case TransformKind::FallingY2: {
            if (printed) return falling_or_zero(s, j, t.m2);
            if (j < t.m2) return 0.0;
            return std::pow(c, double(t.m2)) * ipow(A, -t.m2) * detail::lam_falling(s, j, t.m2);
        }
        case TransformKind::OminusWeighted: {
            if (printed) {
                double f = falling_or_zero(s, i, t.m1);
                if (f == 0.0) return 0.0;
                return f * ominus_pow(s, ipow(s.phi1, n + j), spec.a1 * ipow(s.phi2, n + j), t.m1);
            }
            if (i < t.m1) return 0.0;
            return std::pow(c, double(t.m1)) * ipow(A, -t.m1) * detail::lam_falling(s, i, t.m1)
                 * lam_shift_prod(s, spec.a1, n + j, t.m1, false);
        }
        case TransformKind::OminusWeightedAlt: {
            // the theorem display's -m2 exponent reading (weight order m2)
            double f = falling_or_zero(s, i, t.m1) * falling_or_zero(s, j, t.m2);
            if (f == 0.0) return 0.0;
            return f * ominus_pow(s, ipow(s.phi1, n + j), spec.a1 * ipow(s.phi2, n + j), t.m2);
        }
        case TransformKind::FallingProduct: {  // joint of (ntsk5), proof reading
            if (printed) {
                double f = falling_or_zero(s, i, t.m1) * falling_or_zero(s, j, t.m2);
                if (f == 0.0) return 0.0;
                return f * ominus_pow(s, ipow(s.phi1, n + j), spec.a1 * ipow(s.phi2, n + j), t.m1);
            }
            if (i < t.m1 || j < t.m2) return 0.0;
            return std::pow(c, double(t.m1 + t.m2)) * ipow(A, -t.m1 - t.m2)
                 * detail::lam_falling(s, i, t.m1) * detail::lam_falling(s, j, t.m2)
                 * lam_shift_prod(s, spec.a1, n + j, t.m1, false);
        }
        default: break;
        }
        break;
    }
    }
    throw validation_error("transform_value: transform kind not defined for this family");
}

double expect(const PmfTable& table, const Transform& t) {
    KahanSum acc;
    for (const auto& e : table.entries) {
        if (e.prob == 0.0) continue;
        acc.add(transform_value(table.spec, t, e.y1, e.y2) * e.prob);
    }
    return acc.value();
}

double expect(const ExpectationQuery& query) {
    PmfTable table = support(query.spec, query.tail_tol);
    return expect(table, query.transform);
}

double expect_conditional(const DistributionSpec& spec, const Transform& t, long long given,
                          double tail_tol) {
    const auto& s = spec.scheme;
    KahanSum acc;
    switch (spec.family) {
    case Family::T1: {
        long long nu = spec.n - given;
        for (long long j = 0; j <= nu; ++j) {
            double f = falling_or_zero(s, j, t.m2);
            if (f == 0.0) continue;
            double g = t.reading == Reading::Printed ? f : std::pow(s.phi1, double((nu - j) * t.m2)) * f;
            acc.add(g * pmf_binom1(s, nu, spec.a2, j));
        }
        return acc.value();
    }
    case Family::T2: {
        long long nu = spec.n - given;
        for (long long j = 0; j <= nu; ++j) {
            double f = falling_or_zero(s, j, t.m2);
            if (f == 0.0) continue;
            double g = t.reading == Reading::Printed ? f : std::pow(s.lead(), double((nu - j) * t.m2)) * f;
            acc.add(g * pmf_binom2(s, nu, spec.a2, j));
        }
        return acc.value();
    }
    case Family::NT1: {
        long long nu = spec.n + given;
        DistributionSpec cond = spec;
        cond.n = nu;
        long long B = 16;
        double prev = -1.0;
        for (;;) {
            auto row = negbin1_row(s, nu, spec.a1, B);
            KahanSum sum;
            for (long long u = 0; u <= B; ++u) {
                double f = t.reading == Reading::Printed
                               ? inv_brackets_or_zero(cond, t.brackets, u, t.m1)
                               : nt1_w_marginal(cond, t.brackets, u, t.m1);
                if (f != 0.0) sum.add(f * row[size_t(u)]);
            }
            double v = sum.value();
            if (prev >= 0.0 && std::abs(v - prev) <= tail_tol * std::max(1.0, std::abs(v)))
                return v;
            prev = v;
            B *= 2;
            if (B > 100000) throw truncation_error("expect_conditional: no convergence", B, v);
        }
    }
    case Family::NT2: {
        long long nu = spec.n + given;
        double c = s.bracket_scale();
        long long B = 16;
        double prev = -1.0;
        for (;;) {
            auto row = negbin2_row(s, nu, spec.a1, B);
            KahanSum sum;
            for (long long u = 0; u <= B; ++u) {
                double g;
                if (t.reading == Reading::Printed) {
                    g = falling_or_zero(s, u, t.m1);
                } else {
                    if (u < t.m1) continue;
                    g = std::pow(c, double(t.m1)) * std::pow(s.lead(), double(-t.m1))
                      * detail::lam_falling(s, u, t.m1);
                }
                if (g != 0.0) sum.add(g * row[size_t(u)]);
            }
            double v = sum.value();
            if (prev >= 0.0 && std::abs(v - prev) <= tail_tol * std::max(1.0, std::abs(v)))
                return v;
            prev = v;
            B *= 2;
            if (B > 100000) throw truncation_error("expect_conditional: no convergence", B, v);
        }
    }
    }
    throw validation_error("expect_conditional: unsupported family");
}

double cov_oracle(const PmfTable& table, Reading reading) {
    const auto& spec = table.spec;
    Transform t1, t2, t12;
    t12.reading = t1.reading = t2.reading = reading;
    switch (spec.family) {
    case Family::T1:
        t1.kind = TransformKind::FallingY1;  t1.m1 = 1;
        t2.kind = TransformKind::FallingY2;  t2.m2 = 1;
        break;
    case Family::T2:
        t1.kind = TransformKind::FallingY1;     t1.m1 = 1;
        t2.kind = TransformKind::OminusWeighted; t2.m2 = 1;
        break;
    case Family::NT1:
        t1.kind = TransformKind::OplusWeighted; t1.m1 = 1;
        t2.kind = TransformKind::InvFallingW2;  t2.m2 = 1;
        break;
    case Family::NT2:
        t1.kind = TransformKind::OminusWeighted; t1.m1 = 1;
        t2.kind = TransformKind::FallingY2;      t2.m2 = 1;
        break;
    }
    // E[g1 g2] - E[g1] E[g2] with the pointwise product, in one table pass
    KahanSum e12, e1, e2;
    for (const auto& e : table.entries) {
        if (e.prob == 0.0) continue;
        double g1 = transform_value(spec, t1, e.y1, e.y2);
        double g2 = transform_value(spec, t2, e.y1, e.y2);
        e12.add(g1 * g2 * e.prob);
        e1.add(g1 * e.prob);
        e2.add(g2 * e.prob);
    }
    return e12.value() - e1.value() * e2.value();
}

} // namespace rpq::verify
