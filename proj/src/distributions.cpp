#include "rpq/distributions.hpp"

#include <cmath>
#include <random>

#include "rpq/errors.hpp"
#include "rpq/kahan.hpp"

namespace rpq {

std::string to_string(Family f) {
    switch (f) {
        case Family::T1: return "t1";
        case Family::NT1: return "nt1";
        case Family::T2: return "t2";
        case Family::NT2: return "nt2";
    }
    return "t1";
}

Family family_from_string(const std::string& s) {
    if (s == "t1") return Family::T1;
    if (s == "nt1") return Family::NT1;
    if (s == "t2") return Family::T2;
    if (s == "nt2") return Family::NT2;
    throw validation_error("unknown family: " + s);
}

bool is_negative(Family f) { return f == Family::NT1 || f == Family::NT2; }

void DistributionSpec::validate() const {
    if (n < 1) throw validation_error("n must be >= 1");
    if (!is_negative(family) && n > kMaxFiniteN)
        throw validation_error("finite families support n <= 32");
    if (!(a1 > 0.0 && a1 < 1.0) || !(a2 > 0.0 && a2 < 1.0))
        throw validation_error("parameters a1, a2 must lie in (0,1)");
}

// ---- univariate pmfs -------------------------------------------------------

double pmf_binom1(const DeformationScheme& s, long long nu, double a, long long x) {
    if (x < 0 || x > nu) throw validation_error("pmf_binom1: x outside 0..nu");
    double f1 = s.phi1, f2 = s.phi2;
    return binomial(s, nu, x) * std::pow(a, double(x))
         * std::pow(f1, double(gbc2(nu - x))) * std::pow(f2, double(gbc2(x)))
         / oplus_pow(s, 1.0, a, nu);
}

double pmf_binom2(const DeformationScheme& s, long long nu, double b, long long x) {
    if (x < 0 || x > nu) throw validation_error("pmf_binom2: x outside 0..nu");
    double A = s.lead();
    return binomial(s, nu, x) * std::pow(b, double(x))
         * std::pow(A, double(gbc2(x) - gbc2(nu)))
         * ominus_pow_lead(s, 1.0, b, nu - x);
}

std::vector<double> negbin1_row(const DeformationScheme& s, long long nu, double a, long long count) {
    std::vector<double> out;
    out.reserve(size_t(count) + 1);
    double p = 1.0 / detail::lam_oplus(s, a, nu);
    out.push_back(p);
    double lam = s.lam();
    double lam_u = 1.0;        // lam^u
    double lam_nu_u = std::pow(lam, double(nu));  // lam^{nu+u}
    for (long long u = 0; u < count; ++u) {
        if (s.limit_mode)
            p *= double(nu + u) / double(u + 1) * a / (1.0 + a);
        else
            p *= (1.0 - lam_nu_u) / (1.0 - lam_u * lam) * lam_u * a / (1.0 + a * lam_nu_u);
        out.push_back(p);
        lam_u *= lam;
        lam_nu_u *= lam;
    }
    return out;
}

std::vector<double> negbin2_row(const DeformationScheme& s, long long nu, double b, long long count) {
    std::vector<double> out;
    out.reserve(size_t(count) + 1);
    double p = detail::lam_ominus(s, b, nu);
    out.push_back(p);
    double lam = s.lam();
    double lam_t = 1.0;
    double lam_nu_t = std::pow(lam, double(nu));
    for (long long t = 0; t < count; ++t) {
        if (s.limit_mode)
            p *= double(nu + t) / double(t + 1) * b;
        else
            p *= (1.0 - lam_nu_t) / (1.0 - lam_t * lam) * b;
        out.push_back(p);
        lam_t *= lam;
        lam_nu_t *= lam;
    }
    return out;
}

double pmf_negbin1(const DeformationScheme& s, long long nu, double a, long long u) {
    if (nu < 1) throw validation_error("pmf_negbin1: nu must be >= 1");
    if (u < 0) throw validation_error("pmf_negbin1: u must be >= 0");
    return negbin1_row(s, nu, a, u).back();
}

double pmf_negbin2(const DeformationScheme& s, long long nu, double b, long long t) {
    if (nu < 1) throw validation_error("pmf_negbin2: nu must be >= 1");
    if (t < 0) throw validation_error("pmf_negbin2: t must be >= 0");
    return negbin2_row(s, nu, b, t).back();
}

// ---- joint pmfs ------------------------------------------------------------

std::optional<double> pmf_t1(const DistributionSpec& spec, long long y1, long long y2) {
    spec.validate();
    const auto& s = spec.scheme;
    long long n = spec.n;
    if (y1 < 0 || y2 < 0 || y1 + y2 > n) return std::nullopt;
    double f1 = s.phi1, f2 = s.phi2;
    return trinomial_coeff(s, n, y1, y2)
         * std::pow(spec.a1, double(y1)) * std::pow(spec.a2, double(y2))
         * std::pow(f1, double(gbc2(n - y1) + gbc2(n - y1 - y2)))
         * std::pow(f2, double(gbc2(y1) + gbc2(y2)))
         / (oplus_pow(s, 1.0, spec.a1, n) * oplus_pow(s, 1.0, spec.a2, n - y1));
}

std::optional<double> pmf_t2(const DistributionSpec& spec, long long x1, long long x2) {
    spec.validate();
    const auto& s = spec.scheme;
    long long n = spec.n;
    if (x1 < 0 || x2 < 0 || x1 + x2 > n) return std::nullopt;
    double A = s.lead();
    return trinomial_coeff(s, n, x1, x2)
         * std::pow(spec.a1, double(x1)) * std::pow(spec.a2, double(x2))
         * std::pow(A, double(gbc2(x1) - gbc2(n) + gbc2(x2) - gbc2(n - x1)))
         * ominus_pow_lead(s, 1.0, spec.a1, n - x1)
         * ominus_pow_lead(s, 1.0, spec.a2, n - x1 - x2);
}

std::optional<double> pmf_nt1(const DistributionSpec& spec, long long w1, long long w2) {
    spec.validate();
    if (w1 < 0 || w2 < 0) return std::nullopt;
    return pmf_negbin1(spec.scheme, spec.n, spec.a2, w2)
         * pmf_negbin1(spec.scheme, spec.n + w2, spec.a1, w1);
}

std::optional<double> pmf_nt2(const DistributionSpec& spec, long long v1, long long v2) {
    spec.validate();
    if (v1 < 0 || v2 < 0) return std::nullopt;
    return pmf_negbin2(spec.scheme, spec.n, spec.a2, v2)
         * pmf_negbin2(spec.scheme, spec.n + v2, spec.a1, v1);
}

std::optional<double> pmf(const DistributionSpec& spec, long long i, long long j) {
    switch (spec.family) {
        case Family::T1: return pmf_t1(spec, i, j);
        case Family::NT1: return pmf_nt1(spec, i, j);
        case Family::T2: return pmf_t2(spec, i, j);
        case Family::NT2: return pmf_nt2(spec, i, j);
    }
    return std::nullopt;
}

std::optional<double> marginal1(const DistributionSpec& spec, long long idx) {
    spec.validate();
    switch (spec.family) {
        case Family::T1:
            if (idx < 0 || idx > spec.n) return std::nullopt;
            return pmf_binom1(spec.scheme, spec.n, spec.a1, idx);
        case Family::T2:
            if (idx < 0 || idx > spec.n) return std::nullopt;
            return pmf_binom2(spec.scheme, spec.n, spec.a1, idx);
        case Family::NT1:  // chain head is the second count
            if (idx < 0) return std::nullopt;
            return pmf_negbin1(spec.scheme, spec.n, spec.a2, idx);
        case Family::NT2:
            if (idx < 0) return std::nullopt;
            return pmf_negbin2(spec.scheme, spec.n, spec.a2, idx);
    }
    return std::nullopt;
}

std::optional<double> conditional2(const DistributionSpec& spec, long long idx, long long given) {
    spec.validate();
    switch (spec.family) {
        case Family::T1:
            if (given < 0 || given > spec.n || idx < 0 || idx > spec.n - given) return std::nullopt;
            return pmf_binom1(spec.scheme, spec.n - given, spec.a2, idx);
        case Family::T2:
            if (given < 0 || given > spec.n || idx < 0 || idx > spec.n - given) return std::nullopt;
            return pmf_binom2(spec.scheme, spec.n - given, spec.a2, idx);
        case Family::NT1:  // first count given the second
            if (given < 0 || idx < 0) return std::nullopt;
            return pmf_negbin1(spec.scheme, spec.n + given, spec.a1, idx);
        case Family::NT2:
            if (given < 0 || idx < 0) return std::nullopt;
            return pmf_negbin2(spec.scheme, spec.n + given, spec.a1, idx);
    }
    return std::nullopt;
}

// ---- support tables --------------------------------------------------------

namespace {

constexpr long long kBoundCap = 10000;

double window_mass(const DistributionSpec& spec, long long B, std::vector<PmfEntry>* entries) {
    KahanSum mass;
    const auto& s = spec.scheme;
    bool first_kind = spec.family == Family::NT1;
    // chain: second index drawn first
    auto outer = first_kind ? negbin1_row(s, spec.n, spec.a2, B)
                            : negbin2_row(s, spec.n, spec.a2, B);
    for (long long j = 0; j <= B; ++j) {
        auto inner = first_kind ? negbin1_row(s, spec.n + j, spec.a1, B)
                                : negbin2_row(s, spec.n + j, spec.a1, B);
        for (long long i = 0; i <= B; ++i) {
            double p = outer[size_t(j)] * inner[size_t(i)];
            mass.add(p);
            if (entries) entries->push_back({i, j, p});
        }
    }
    return mass.value();
}

} // namespace

PmfTable support(const DistributionSpec& spec, double tail_tol) {
    spec.validate();
    if (!(tail_tol > 0.0 && tail_tol <= 1e-2))
        throw validation_error("tail_tol must lie in (0, 1e-2]");
    PmfTable table;
    table.spec = spec;
    if (!is_negative(spec.family)) {
        KahanSum mass;
        for (long long i = 0; i <= spec.n; ++i)
            for (long long j = 0; j + i <= spec.n; ++j) {
                double p = *pmf(spec, i, j);
                table.entries.push_back({i, j, p});
                mass.add(p);
            }
        table.truncated = false;
        table.captured_mass = mass.value();
        table.truncation_bound = spec.n;
        return table;
    }
    for (long long B = 16; B <= kBoundCap; B *= 2) {
        double mass = window_mass(spec, B, nullptr);
        if (mass >= 1.0 - tail_tol) {
            table.entries.reserve(size_t(B + 1) * size_t(B + 1));
            table.captured_mass = window_mass(spec, B, &table.entries);
            table.truncated = true;
            table.truncation_bound = B;
            // entries were filled second-index-major; reorder to first-major
            std::vector<PmfEntry> ordered;
            ordered.reserve(table.entries.size());
            for (long long i = 0; i <= B; ++i)
                for (long long j = 0; j <= B; ++j)
                    ordered.push_back(table.entries[size_t(j) * size_t(B + 1) + size_t(i)]);
            table.entries = std::move(ordered);
            return table;
        }
        if (B * 2 > kBoundCap)
            throw truncation_error("support: truncation bound cap reached", B, mass);
    }
    throw truncation_error("support: truncation bound cap reached", kBoundCap, 0.0);
}

SampleBatch sample(const DistributionSpec& spec, long long count, std::uint64_t seed,
                   double tail_tol) {
    if (count < 1) throw validation_error("sample: count must be >= 1");
    PmfTable table = support(spec, tail_tol);
    // cumulative over the table order, normalized by captured mass
    std::vector<double> cdf;
    cdf.reserve(table.entries.size());
    KahanSum acc;
    for (const auto& e : table.entries) {
        acc.add(e.prob);
        cdf.push_back(acc.value());
    }
    double total = cdf.back();
    SampleBatch batch;
    batch.spec = spec;
    batch.seed = seed;
    batch.convention = "inverse-cdf over enumerated support (tail_tol when truncated)";
    batch.draws.reserve(size_t(count));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (long long k = 0; k < count; ++k) {
        double u = unif(rng) * total;
        auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
        size_t idx = size_t(it - cdf.begin());
        if (idx >= table.entries.size()) idx = table.entries.size() - 1;
        batch.draws.emplace_back(table.entries[idx].y1, table.entries[idx].y2);
    }
    return batch;
}

// ---- closed forms ----------------------------------------------------------

namespace {

void require_range(bool ok, const char* what) {
    if (!ok) throw validation_error(std::string("theorem range violated: ") + what);
}

void require_family(const DistributionSpec& spec, Family f, const char* op) {
    spec.validate();
    if (spec.family != f)
        throw validation_error(std::string(op) + ": wrong family for this moment");
}

} // namespace

double fm_t1_y1(const DistributionSpec& spec, long long m1) {
    require_family(spec, Family::T1, "fm_t1_y1");
    require_range(m1 >= 0 && m1 <= spec.n, "m1 <= n");
    const auto& s = spec.scheme;
    return std::pow(spec.a1, double(m1)) * std::pow(s.phi2, double(gbc2(m1)))
         * falling(s, spec.n, m1) / oplus_pow(s, 1.0, spec.a1, m1);
}

double fm_t1_y2_given(const DistributionSpec& spec, long long m2, long long y1) {
    require_family(spec, Family::T1, "fm_t1_y2_given");
    require_range(y1 >= 0 && y1 <= spec.n && m2 >= 0 && m2 <= spec.n - y1, "m2 <= n - y1");
    const auto& s = spec.scheme;
    return std::pow(spec.a2, double(m2)) * std::pow(s.phi2, double(gbc2(m2)))
         * falling(s, spec.n - y1, m2) / oplus_pow(s, 1.0, spec.a2, m2);
}

double fm_t1_y2(const DistributionSpec& spec, long long m2) {
    require_family(spec, Family::T1, "fm_t1_y2");
    require_range(m2 >= 0 && m2 <= spec.n, "m2 <= n");
    const auto& s = spec.scheme;
    long long n = spec.n;
    double f1 = s.phi1, f2 = s.phi2;
    return std::pow(spec.a2, double(m2))
         * std::pow(f1, double(gbc2(m2) + m2 * (n - m2))) * std::pow(f2, double(gbc2(m2)))
         * falling(s, n, m2)
         / (oplus_pow(s, 1.0, spec.a2, m2)
            * oplus_pow(s, std::pow(f1, double(n - m2)), spec.a1 * std::pow(f2, double(n - m2)), m2));
}

double fm_t1_joint(const DistributionSpec& spec, long long m1, long long m2) {
    require_family(spec, Family::T1, "fm_t1_joint");
    require_range(m2 >= 0 && m2 <= spec.n && m1 >= 0 && m1 <= spec.n - m2,
                  "m2 <= n and m1 <= n - m2");
    const auto& s = spec.scheme;
    long long n = spec.n;
    double f1 = s.phi1, f2 = s.phi2;
    return std::pow(f1, double(gbc2(m2) + m2 * (n - m2)))
         * std::pow(f2, double(gbc2(m1) + gbc2(m2)))
         * std::pow(spec.a1, double(m1)) * std::pow(spec.a2, double(m2))
         * falling(s, n, m1 + m2)
         / (oplus_pow(s, 1.0, spec.a1, m1) * oplus_pow(s, 1.0, spec.a2, m2)
            * oplus_pow(s, std::pow(f1, double(n - m2)), spec.a1 * std::pow(f2, double(n - m2)), m2));
}

double cov_t1(const DistributionSpec& spec) {
    require_family(spec, Family::T1, "cov_t1");
    const auto& s = spec.scheme;
    long long n = spec.n;
    double f1 = s.phi1, f2 = s.phi2;
    // [n](phi1 [n-1] - [n]) = -(phi1 phi2)^{n-1} [n] for D = phi1 - phi2
    return std::pow(f1, double(n - 1)) * spec.a1 * spec.a2 * number(s, n)
         * (f1 * number(s, n - 1) - number(s, n))
         / ((1.0 + spec.a1) * (1.0 + spec.a2)
            * (std::pow(f1, double(n - 1)) + spec.a1 * std::pow(f2, double(n - 1))));
}

double fm_nt1_w2(const DistributionSpec& spec, long long m2) {
    require_family(spec, Family::NT1, "fm_nt1_w2");
    require_range(m2 >= 0, "m2 >= 0");
    return std::pow(spec.a2, double(m2)) * falling(spec.scheme, spec.n + m2 - 1, m2);
}

double fm_nt1_w1_given(const DistributionSpec& spec, long long m1, long long w2) {
    require_family(spec, Family::NT1, "fm_nt1_w1_given");
    require_range(m1 >= 0 && w2 >= 0, "m1, w2 >= 0");
    return std::pow(spec.a1, double(m1)) * falling(spec.scheme, spec.n + w2 + m1 - 1, m1);
}

double fm_nt1_weighted(const DistributionSpec& spec, long long m1) {
    require_family(spec, Family::NT1, "fm_nt1_weighted");
    require_range(m1 >= 0, "m1 >= 0");
    return std::pow(spec.a1, double(m1)) * falling(spec.scheme, spec.n + m1 - 1, m1);
}

double fm_nt1_joint_weighted(const DistributionSpec& spec, long long m1, long long m2) {
    require_family(spec, Family::NT1, "fm_nt1_joint_weighted");
    require_range(m1 >= 0 && m2 >= 0, "m1, m2 >= 0");
    return std::pow(spec.a1, double(m1)) * std::pow(spec.a2, double(m2))
         * falling(spec.scheme, spec.n + m1 + m2 - 1, m1 + m2);
}

double cov_nt1(const DistributionSpec& spec) {
    require_family(spec, Family::NT1, "cov_nt1");
    const auto& s = spec.scheme;
    // [n] a1 a2 ([n+1]/lead - [n]); reduces to the paper's [n]a1a2([n+1]-[n])
    // in the classical limit
    return number(s, spec.n) * spec.a1 * spec.a2
         * (number(s, spec.n + 1) / s.lead() - number(s, spec.n));
}

double fm_t2_x1(const DistributionSpec& spec, long long m1) {
    require_family(spec, Family::T2, "fm_t2_x1");
    require_range(m1 >= 0 && m1 <= spec.n, "m1 <= n");
    return std::pow(spec.a1, double(m1)) * falling(spec.scheme, spec.n, m1);
}

double fm_t2_x2_given(const DistributionSpec& spec, long long m2, long long x1) {
    require_family(spec, Family::T2, "fm_t2_x2_given");
    require_range(x1 >= 0 && x1 <= spec.n && m2 >= 0 && m2 <= spec.n - x1, "m2 <= n - x1");
    return std::pow(spec.a2, double(m2)) * falling(spec.scheme, spec.n - x1, m2);
}

double fm_t2_weighted(const DistributionSpec& spec, long long m2) {
    require_family(spec, Family::T2, "fm_t2_weighted");
    require_range(m2 >= 0 && m2 <= spec.n, "m2 <= n");
    return std::pow(spec.a2, double(m2)) * falling(spec.scheme, spec.n, m2);
}

double fm_t2_joint_weighted(const DistributionSpec& spec, long long m1, long long m2) {
    require_family(spec, Family::T2, "fm_t2_joint_weighted");
    require_range(m2 >= 0 && m2 <= spec.n && m1 >= 0 && m1 <= spec.n - m2,
                  "m2 <= n and m1 <= n - m2");
    return std::pow(spec.a1, double(m1)) * std::pow(spec.a2, double(m2))
         * falling(spec.scheme, spec.n, m1 + m2);
}

double cov_t2(const DistributionSpec& spec) {
    require_family(spec, Family::T2, "cov_t2");
    const auto& s = spec.scheme;
    return number(s, spec.n) * spec.a1 * spec.a2
         * (s.lead() * number(s, spec.n - 1) - number(s, spec.n));
}

double fm_nt2_v2(const DistributionSpec& spec, long long m2) {
    require_family(spec, Family::NT2, "fm_nt2_v2");
    require_range(m2 >= 0, "m2 >= 0");
    const auto& s = spec.scheme;
    double An = std::pow(s.lead(), double(spec.n)), Bn = std::pow(s.sub(), double(spec.n));
    return std::pow(spec.a2, double(m2)) * falling(s, spec.n + m2 - 1, m2)
         / ominus_pow_lead(s, An, spec.a2 * Bn, m2);
}

double fm_nt2_v1_given(const DistributionSpec& spec, long long m1, long long v2) {
    require_family(spec, Family::NT2, "fm_nt2_v1_given");
    require_range(m1 >= 0 && v2 >= 0, "m1, v2 >= 0");
    const auto& s = spec.scheme;
    double Ak = std::pow(s.lead(), double(spec.n + v2)), Bk = std::pow(s.sub(), double(spec.n + v2));
    return std::pow(spec.a1, double(m1)) * falling(s, spec.n + v2 + m1 - 1, m1)
         / ominus_pow_lead(s, Ak, spec.a1 * Bk, m1);
}

double fm_nt2_weighted(const DistributionSpec& spec, long long m1) {
    require_family(spec, Family::NT2, "fm_nt2_weighted");
    require_range(m1 >= 0, "m1 >= 0");
    const auto& s = spec.scheme;
    double An = std::pow(s.lead(), double(spec.n)), Bn = std::pow(s.sub(), double(spec.n));
    return std::pow(spec.a1, double(m1)) * falling(s, spec.n + m1 - 1, m1)
         / ominus_pow_lead(s, An, spec.a2 * Bn, m1);
}

double fm_nt2_joint_weighted(const DistributionSpec& spec, long long m1, long long m2) {
    require_family(spec, Family::NT2, "fm_nt2_joint_weighted");
    require_range(m1 >= 0 && m2 >= 0, "m1, m2 >= 0");
    const auto& s = spec.scheme;
    double An = std::pow(s.lead(), double(spec.n)), Bn = std::pow(s.sub(), double(spec.n));
    return std::pow(spec.a1, double(m1)) * std::pow(spec.a2, double(m2))
         * falling(s, spec.n + m1 + m2 - 1, m1 + m2)
         / ominus_pow_lead(s, An, spec.a2 * Bn, m1 + m2);
}

double cov_nt2(const DistributionSpec& spec) {
    require_family(spec, Family::NT2, "cov_nt2");
    const auto& s = spec.scheme;
    long long n = spec.n;
    auto dn = [&](long long k) {
        return std::pow(s.lead(), double(k)) - spec.a2 * std::pow(s.sub(), double(k));
    };
    return number(s, n) * spec.a1 * spec.a2 / dn(n)
         * (number(s, n + 1) / dn(n + 1) - number(s, n) / dn(n));
}

} // namespace rpq
