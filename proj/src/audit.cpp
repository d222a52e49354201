#include "rpq/audit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rpq/errors.hpp"
#include "rpq/kahan.hpp"
#include "rpq/printed.hpp"

namespace rpq::verify {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::SuspectedTypo: return "SUSPECTED_TYPO";
    }
    return "FAIL";
}

bool AuditReport::has_fail() const {
    return std::any_of(rows.begin(), rows.end(),
                       [](const AuditRow& r) { return r.verdict == Verdict::Fail; });
}

std::size_t AuditReport::count(Verdict v) const {
    return std::size_t(std::count_if(rows.begin(), rows.end(),
                                     [v](const AuditRow& r) { return r.verdict == v; }));
}

double rel_err(double a, double b) {
    if (a == b) return 0.0;
    double scale = std::max({std::abs(a), std::abs(b), 1e-14});
    return std::abs(a - b) / scale;
}

namespace {

std::string scheme_echo(const DeformationScheme& s) {
    std::ostringstream os;
    os << to_string(s.preset) << "(phi1=" << s.phi1 << ",phi2=" << s.phi2 << ",D=" << s.D << ")";
    return os.str();
}

void emit(AuditReport& rep, const std::string& label, double closed, double oracle,
          double tol, bool watchlisted) {
    AuditRow row;
    row.label = label;
    row.closed_form = closed;
    row.oracle = oracle;
    row.rel_err = rel_err(closed, oracle);
    bool ok = std::isfinite(row.rel_err) && row.rel_err <= tol;
    row.verdict = ok ? Verdict::Pass : (watchlisted ? Verdict::SuspectedTypo : Verdict::Fail);
    rep.rows.push_back(std::move(row));
}

std::string tag(const char* eq, long long n, long long m1, long long m2 = -1) {
    std::ostringstream os;
    os << eq << "[n=" << n;
    if (m1 >= 0) os << ";m1=" << m1;
    if (m2 >= 0) os << ";m2=" << m2;
    os << "]";
    return os.str();
}

Transform mk_transform(TransformKind k, long long m1, long long m2,
                       Reading r = Reading::Theorem,
                       InvBrackets b = InvBrackets::Identity015) {
    Transform t;
    t.kind = k;
    t.m1 = m1;
    t.m2 = m2;
    t.reading = r;
    t.brackets = b;
    return t;
}

} // namespace

AuditReport audit_theorems(const TheoremAuditConfig& cfg) {
    AuditReport rep;
    rep.scheme_echo = scheme_echo(cfg.scheme);
    rep.tol_finite = cfg.tol_finite;
    rep.tol_truncated = cfg.tol_truncated;
    const double tf = cfg.tol_finite, tt = cfg.tol_truncated;
    const long long M = cfg.max_order;
    bool quesne = cfg.scheme.preset == Preset::Quesne;
    bool custom = cfg.scheme.preset == Preset::Custom;

    for (long long n = 1; n <= cfg.max_n; ++n) {
        // ---------------- first kind ----------------
        DistributionSpec t1{Family::T1, cfg.scheme, n, cfg.a1, cfg.a2};
        PmfTable tab1 = support(t1, cfg.tail_tol);
        for (long long m = 0; m <= std::min(M, n); ++m) {
            emit(rep, tag("tfk1", n, m), fm_t1_y1(t1, m),
                 expect(tab1, mk_transform(TransformKind::FallingY1, m, 0)), tf, false);
            emit(rep, tag("tfk3", n, -1, m), fm_t1_y2(t1, m),
                 expect(tab1, mk_transform(TransformKind::FallingY2, 0, m)), tf, false);
        }
        {
            long long y1 = n / 2;
            for (long long m = 0; m <= std::min(M, n - y1); ++m) {
                std::ostringstream os;
                os << "tfk2[n=" << n << ";y1=" << y1 << ";m2=" << m << "]";
                emit(rep, os.str(), fm_t1_y2_given(t1, m, y1),
                     expect_conditional(t1, mk_transform(TransformKind::FallingY2, 0, m), y1), tf, false);
            }
        }
        for (long long m2 = 0; m2 <= std::min(M, n); ++m2)
            for (long long m1 = 0; m1 <= std::min(M, n - m2); ++m1)
                emit(rep, tag("tfk4", n, m1, m2), fm_t1_joint(t1, m1, m2),
                     expect(tab1, mk_transform(TransformKind::FallingProduct, m1, m2)), tf, false);
        emit(rep, tag("cov_t1", n, -1), cov_t1(t1), cov_oracle(tab1), tf, false);
        if (cfg.printed_rows) {
            emit(rep, "printed:" + tag("tfk1", n, 1), fm_t1_y1(t1, std::min<long long>(1, n)),
                 expect(tab1, mk_transform(TransformKind::FallingY1, std::min<long long>(1, n), 0,
                                           Reading::Printed)), tf, true);
            emit(rep, "printed:" + tag("cov_t1", n, -1), printed::cov_t1(t1), cov_oracle(tab1), tf, true);
            emit(rep, "printed:" + tag("pmf_t1.mass", n, -1), 1.0, printed::mass(t1), tf, true);
        }

        // ---------------- second kind ----------------
        DistributionSpec t2{Family::T2, cfg.scheme, n, cfg.a1, cfg.a2};
        PmfTable tab2 = support(t2, cfg.tail_tol);
        for (long long m = 0; m <= std::min(M, n); ++m) {
            emit(rep, tag("tsk2", n, m), fm_t2_x1(t2, m),
                 expect(tab2, mk_transform(TransformKind::FallingY1, m, 0)), tf, false);
            emit(rep, tag("tsk4", n, -1, m), fm_t2_weighted(t2, m),
                 expect(tab2, mk_transform(TransformKind::OminusWeighted, 0, m)), tf, false);
        }
        {
            long long x1 = n / 2;
            for (long long m = 0; m <= std::min(M, n - x1); ++m) {
                std::ostringstream os;
                os << "tsk3[n=" << n << ";x1=" << x1 << ";m2=" << m << "]";
                emit(rep, os.str(), fm_t2_x2_given(t2, m, x1),
                     expect_conditional(t2, mk_transform(TransformKind::FallingY2, 0, m), x1), tf, false);
            }
        }
        for (long long m2 = 0; m2 <= std::min(M, n); ++m2)
            for (long long m1 = 0; m1 <= std::min(M, n - m2); ++m1)
                emit(rep, tag("tsk5", n, m1, m2), fm_t2_joint_weighted(t2, m1, m2),
                     expect(tab2, mk_transform(TransformKind::FallingProduct, m1, m2)), tf, false);
        emit(rep, tag("cov_t2", n, -1), cov_t2(t2), cov_oracle(tab2), tf, false);
        if (cfg.printed_rows) {
            emit(rep, "printed:" + tag("tsk2", n, 1), fm_t2_x1(t2, std::min<long long>(1, n)),
                 expect(tab2, mk_transform(TransformKind::FallingY1, std::min<long long>(1, n), 0,
                                           Reading::Printed)), tf, true);
            emit(rep, "printed:" + tag("cov_t2", n, -1), printed::cov_t2(t2), cov_oracle(tab2), tf, true);
            emit(rep, "printed:" + tag("pmf_t2.mass", n, -1), 1.0, printed::mass(t2), tf, true);
        }

        // ---------------- negative first kind ----------------
        DistributionSpec nt1{Family::NT1, cfg.scheme, n, cfg.a1, cfg.a2};
        PmfTable ntab1 = support(nt1, cfg.tail_tol);
        for (long long m = 0; m <= M; ++m) {
            emit(rep, tag("ntfk1", n, -1, m), fm_nt1_w2(nt1, m),
                 expect(ntab1, mk_transform(TransformKind::InvFallingW2, 0, m)), tt, false);
            emit(rep, tag("ntfk3", n, m), fm_nt1_weighted(nt1, m),
                 expect(ntab1, mk_transform(TransformKind::OplusWeighted, m, 0)), tt, false);
            std::ostringstream os;
            os << "ntfk2[n=" << n << ";w2=1;m1=" << m << "]";
            emit(rep, os.str(), fm_nt1_w1_given(nt1, m, 1),
                 expect_conditional(nt1, mk_transform(TransformKind::InvFallingW1, m, 0), 1, cfg.tail_tol),
                 tt, false);
        }
        for (long long m1 = 0; m1 <= M; ++m1)
            for (long long m2 = 0; m2 <= M; ++m2)
                emit(rep, tag("ntfk4", n, m1, m2), fm_nt1_joint_weighted(nt1, m1, m2),
                     expect(ntab1, mk_transform(TransformKind::FallingProduct, m1, m2)), tt, false);
        emit(rep, tag("cov_nt1", n, -1), cov_nt1(nt1), cov_oracle(ntab1), tt, false);
        if (cfg.printed_rows) {
            emit(rep, "printed:" + tag("ntfk1", n, -1, 1), fm_nt1_w2(nt1, 1),
                 expect(ntab1, mk_transform(TransformKind::InvFallingW2, 0, 1, Reading::Printed)), tt, true);
            emit(rep, "printed:" + tag("cov_nt1", n, -1), printed::cov_nt1(nt1), cov_oracle(ntab1), tt, true);
            emit(rep, "printed:" + tag("pmf_nt1.mass", n, -1), 1.0,
                 printed::mass(nt1, std::min<long long>(ntab1.truncation_bound, 96)), tt, true);
            if (!custom) {
                // inverse-preset brackets (differ from the identity-based ones
                // only for Quesne, whose D breaks the inversion relations)
                emit(rep, tag("ntfk1.scheme-brackets", n, -1, 1), fm_nt1_w2(nt1, 1),
                     expect(ntab1, mk_transform(TransformKind::InvFallingW2, 0, 1, Reading::Theorem,
                                                InvBrackets::InverseScheme)), tt, quesne);
            }
        }

        // ---------------- negative second kind ----------------
        DistributionSpec nt2{Family::NT2, cfg.scheme, n, cfg.a1, cfg.a2};
        PmfTable ntab2 = support(nt2, cfg.tail_tol);
        for (long long m = 0; m <= M; ++m) {
            emit(rep, tag("ntsk2", n, -1, m), fm_nt2_v2(nt2, m),
                 expect(ntab2, mk_transform(TransformKind::FallingY2, 0, m)), tt, false);
            emit(rep, tag("ntsk4", n, m), fm_nt2_weighted(nt2, m),
                 expect(ntab2, mk_transform(TransformKind::OminusWeighted, m, 0)), tt, false);
            std::ostringstream os;
            os << "ntsk3[n=" << n << ";v2=1;m1=" << m << "]";
            emit(rep, os.str(), fm_nt2_v1_given(nt2, m, 1),
                 expect_conditional(nt2, mk_transform(TransformKind::OminusWeighted, m, 0), 1, cfg.tail_tol),
                 tt, false);
        }
        for (long long m1 = 0; m1 <= M; ++m1)
            for (long long m2 = 0; m2 <= M; ++m2)
                emit(rep, tag("ntsk5", n, m1, m2), fm_nt2_joint_weighted(nt2, m1, m2),
                     expect(ntab2, mk_transform(TransformKind::FallingProduct, m1, m2)), tt, false);
        emit(rep, tag("cov_nt2", n, -1), cov_nt2(nt2), cov_oracle(ntab2), tt, false);
        if (cfg.printed_rows) {
            emit(rep, "printed:" + tag("ntsk2", n, -1, 1), fm_nt2_v2(nt2, 1),
                 expect(ntab2, mk_transform(TransformKind::FallingY2, 0, 1, Reading::Printed)), tt, true);
            // the theorem display's -m2 weight order vs the proof's -m1
            emit(rep, "printed:" + tag("ntsk5.m2-weight", n, 2, 1), fm_nt2_joint_weighted(nt2, 2, 1),
                 expect(ntab2, mk_transform(TransformKind::OminusWeightedAlt, 2, 1)), tt, true);
            emit(rep, "printed:" + tag("cov_nt2", n, -1), printed::cov_nt2(nt2), cov_oracle(ntab2), tt,
                 cfg.scheme.mirrored());
            emit(rep, "printed:" + tag("pmf_nt2.mass", n, -1), 1.0,
                 printed::mass(nt2, std::min<long long>(ntab2.truncation_bound, 96)), tt, true);
            // lemma (ntskb) with its beta_2 read as beta
            emit(rep, "printed:" + tag("ntskb", n, 1), fm_nt2_v2(nt2, 1),
                 expect(ntab2, mk_transform(TransformKind::FallingY2, 0, 1, Reading::Printed)), tt, true);
        }
    }

    // inverse-parameter relations (011)/(014)/(015); Quesne is watchlisted
    // (its D breaks them: number(inverse,1) = q/p against p/q)
    if (!custom) {
        DeformationScheme inv = cfg.scheme.inverse();
        double pp = cfg.scheme.phi1 * cfg.scheme.phi2;
        for (long long x = 1; x <= 12; ++x) {
            std::ostringstream os;
            os << "inv011[x=" << x << "]";
            emit(rep, os.str(), std::pow(pp, double(1 - x)) * number(cfg.scheme, x),
                 number(inv, x), 1e-12, quesne);
        }
        for (long long r = 0; r <= 12; ++r) {
            std::ostringstream os;
            os << "inv014[r=" << r << "]";
            emit(rep, os.str(), std::pow(pp, double(-gbc2(r))) * factorial(cfg.scheme, r),
                 factorial(inv, r), 1e-12, quesne);
        }
        for (long long x = 0; x <= 10; ++x)
            for (long long r = 0; r <= x; ++r) {
                std::ostringstream os;
                os << "inv015[x=" << x << ";r=" << r << "]";
                emit(rep, os.str(), inv_falling(cfg.scheme, x, r), falling(inv, x, r), 1e-12, quesne);
            }
    }
    return rep;
}

AuditReport normalization_sweep(const std::vector<NormalizationPoint>& grid,
                                double tol_finite, double tail_tol, bool printed_rows) {
    AuditReport rep;
    rep.scheme_echo = "normalization sweep";
    rep.tol_finite = tol_finite;
    rep.tol_truncated = tail_tol;
    for (const auto& pt : grid) {
        DistributionSpec spec{pt.family, pt.scheme, pt.n, pt.a1, pt.a2};
        std::ostringstream os;
        os << "norm[" << to_string(pt.family) << ";" << pt.scheme_name << ";n=" << pt.n
           << ";a1=" << pt.a1 << ";a2=" << pt.a2 << "]";
        if (!is_negative(pt.family)) {
            PmfTable tab = support(spec, 1e-3);  // tail_tol unused for finite support
            emit(rep, os.str(), 1.0, tab.captured_mass, tol_finite, false);
        } else {
            AuditRow row;
            row.label = os.str();
            row.closed_form = 1.0;
            try {
                PmfTable tab = support(spec, tail_tol);
                row.oracle = tab.captured_mass;
                row.rel_err = rel_err(1.0, tab.captured_mass);
                row.verdict = tab.captured_mass >= 1.0 - tail_tol ? Verdict::Pass : Verdict::Fail;
            } catch (const truncation_error& e) {
                row.oracle = e.captured;
                row.rel_err = rel_err(1.0, e.captured);
                row.verdict = Verdict::Fail;
            }
            rep.rows.push_back(std::move(row));
        }
        if (printed_rows)
            emit(rep, "printed:" + os.str(), 1.0, printed::mass(spec), tol_finite, true);
    }
    return rep;
}

} // namespace rpq::verify
