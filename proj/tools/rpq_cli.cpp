// Command-line front door: pmf tables, closed-form moments and covariances
// with optional oracle cross-checks, the audit suites, sampling, and the
// Monte-Carlo convention check. Exit codes: 0 ok, 1 invalid input,
// 2 truncation failure, 3 audit FAIL under --strict.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rpq/audit.hpp"
#include "rpq/distributions.hpp"
#include "rpq/errors.hpp"
#include "rpq/mc.hpp"
#include "rpq/report_io.hpp"
#include "rpq/verify.hpp"

namespace {

using namespace rpq;

struct CliConfig {
    std::string scheme = "js";
    double p = 0.9, q = 0.5;
    double phi1 = 0.0, phi2 = 0.0, D = 0.0;
    bool has_D = false;

    std::string family = "t1";
    long long n = 1;
    double a1 = 0.5, a2 = 0.5;
    long long m1 = 1, m2 = 1;

    double tol = 1e-9;
    double tail_tol = 0.0;  // 0 = command default
    long long max_support = 10000;
    std::uint64_t seed = 1;
    long long samples = 100000;
    long long count = 10;

    std::string format;  // empty = env default
    std::string out;
    std::string suite = "theorems";
    bool verify_flag = false;
    bool strict = false;
};

DeformationScheme make_scheme(const CliConfig& c) {
    if (c.scheme == "custom") {
        if (c.phi1 <= 0.0 || c.phi2 <= 0.0)
            throw validation_error("custom scheme needs --phi1 and --phi2");
        return c.has_D ? DeformationScheme::custom(c.phi1, c.phi2, c.D)
                       : DeformationScheme::custom(c.phi1, c.phi2);
    }
    return DeformationScheme::preset_scheme(preset_from_string(c.scheme), c.p, c.q);
}

DistributionSpec make_spec(const CliConfig& c) {
    DistributionSpec spec{family_from_string(c.family), make_scheme(c), c.n, c.a1, c.a2};
    spec.validate();
    return spec;
}

io::Format pick_format(const CliConfig& c) {
    if (!c.format.empty()) return io::format_from_string(c.format);
    if (const char* env = std::getenv("RPQ_DEFAULT_FORMAT")) return io::format_from_string(env);
    return io::Format::Csv;
}

int with_output(const CliConfig& c, const std::function<void(std::ostream&)>& fn) {
    if (c.out.empty()) {
        fn(std::cout);
        return 0;
    }
    std::ofstream f(c.out);
    if (!f) throw validation_error("cannot open output file: " + c.out);
    fn(f);
    return 0;
}

int cmd_pmf(const CliConfig& c) {
    auto spec = make_spec(c);
    double tol = c.tail_tol > 0 ? c.tail_tol : 1e-8;
    PmfTable table = support(spec, tol);
    return with_output(c, [&](std::ostream& os) { io::write_pmf(os, table, pick_format(c)); });
}

void push_moment(std::vector<io::MomentRow>& rows, const std::string& label, double value,
                 bool verify, const DistributionSpec& spec, verify::Transform t, double tail) {
    io::MomentRow row{label, value, false, 0.0};
    if (verify) {
        row.has_oracle = true;
        row.oracle = verify::expect({spec, t, tail});
    }
    rows.push_back(row);
}

int cmd_moments(const CliConfig& c) {
    auto spec = make_spec(c);
    double tail = c.tail_tol > 0 ? c.tail_tol : 1e-10;
    std::vector<io::MomentRow> rows;
    using verify::Transform;
    using verify::TransformKind;
    auto T = [](TransformKind k, long long m1, long long m2) {
        Transform t;
        t.kind = k;
        t.m1 = m1;
        t.m2 = m2;
        return t;
    };
    switch (spec.family) {
    case Family::T1:
        push_moment(rows, "tfk1[m1]", fm_t1_y1(spec, c.m1), c.verify_flag, spec,
                    T(TransformKind::FallingY1, c.m1, 0), tail);
        push_moment(rows, "tfk3[m2]", fm_t1_y2(spec, c.m2), c.verify_flag, spec,
                    T(TransformKind::FallingY2, 0, c.m2), tail);
        push_moment(rows, "tfk4[m1;m2]", fm_t1_joint(spec, c.m1, c.m2), c.verify_flag, spec,
                    T(TransformKind::FallingProduct, c.m1, c.m2), tail);
        break;
    case Family::NT1:
        push_moment(rows, "ntfk1[m2]", fm_nt1_w2(spec, c.m2), c.verify_flag, spec,
                    T(TransformKind::InvFallingW2, 0, c.m2), tail);
        push_moment(rows, "ntfk3[m1]", fm_nt1_weighted(spec, c.m1), c.verify_flag, spec,
                    T(TransformKind::OplusWeighted, c.m1, 0), tail);
        push_moment(rows, "ntfk4[m1;m2]", fm_nt1_joint_weighted(spec, c.m1, c.m2), c.verify_flag,
                    spec, T(TransformKind::FallingProduct, c.m1, c.m2), tail);
        break;
    case Family::T2:
        push_moment(rows, "tsk2[m1]", fm_t2_x1(spec, c.m1), c.verify_flag, spec,
                    T(TransformKind::FallingY1, c.m1, 0), tail);
        push_moment(rows, "tsk4[m2]", fm_t2_weighted(spec, c.m2), c.verify_flag, spec,
                    T(TransformKind::OminusWeighted, 0, c.m2), tail);
        push_moment(rows, "tsk5[m1;m2]", fm_t2_joint_weighted(spec, c.m1, c.m2), c.verify_flag,
                    spec, T(TransformKind::FallingProduct, c.m1, c.m2), tail);
        break;
    case Family::NT2:
        push_moment(rows, "ntsk2[m2]", fm_nt2_v2(spec, c.m2), c.verify_flag, spec,
                    T(TransformKind::FallingY2, 0, c.m2), tail);
        push_moment(rows, "ntsk4[m1]", fm_nt2_weighted(spec, c.m1), c.verify_flag, spec,
                    T(TransformKind::OminusWeighted, c.m1, 0), tail);
        push_moment(rows, "ntsk5[m1;m2]", fm_nt2_joint_weighted(spec, c.m1, c.m2), c.verify_flag,
                    spec, T(TransformKind::FallingProduct, c.m1, c.m2), tail);
        break;
    }
    return with_output(c, [&](std::ostream& os) { io::write_moments(os, rows, pick_format(c)); });
}

int cmd_cov(const CliConfig& c) {
    auto spec = make_spec(c);
    double tail = c.tail_tol > 0 ? c.tail_tol : 1e-10;
    double value = 0.0;
    switch (spec.family) {
        case Family::T1: value = cov_t1(spec); break;
        case Family::NT1: value = cov_nt1(spec); break;
        case Family::T2: value = cov_t2(spec); break;
        case Family::NT2: value = cov_nt2(spec); break;
    }
    std::vector<io::MomentRow> rows;
    io::MomentRow row{"cov[" + to_string(spec.family) + "]", value, false, 0.0};
    if (c.verify_flag) {
        row.has_oracle = true;
        row.oracle = verify::cov_oracle(support(spec, tail));
    }
    rows.push_back(row);
    return with_output(c, [&](std::ostream& os) { io::write_moments(os, rows, pick_format(c)); });
}

int cmd_audit(const CliConfig& c) {
    verify::AuditReport report;
    if (c.suite == "theorems") {
        verify::TheoremAuditConfig cfg;
        cfg.scheme = make_scheme(c);
        cfg.a1 = c.a1;
        cfg.a2 = c.a2;
        cfg.max_n = std::max<long long>(c.n, 1);
        cfg.max_order = std::min<long long>(c.m1 > 1 ? c.m1 : 2, 3);
        cfg.tol_finite = c.tol;
        cfg.tol_truncated = std::max(c.tol, 1e-8);
        report = verify::audit_theorems(cfg);
    } else if (c.suite == "specializations") {
        if (c.scheme == "custom")
            throw validation_error("specialization audit needs a named preset");
        report = verify::audit_specializations(preset_from_string(c.scheme), c.p, c.q);
    } else if (c.suite == "normalization") {
        std::vector<verify::NormalizationPoint> grid;
        DeformationScheme s = make_scheme(c);
        for (Family f : {Family::T1, Family::NT1, Family::T2, Family::NT2})
            for (long long n = 1; n <= std::max<long long>(c.n, 1); ++n)
                for (double a1 : {0.2, 0.5, 0.8})
                    for (double a2 : {0.2, 0.5, 0.8})
                        grid.push_back({s, c.scheme, f, n, a1, a2});
        report = verify::normalization_sweep(grid, 1e-10,
                                             c.tail_tol > 0 ? c.tail_tol : 1e-8);
    } else {
        throw validation_error("unknown audit suite: " + c.suite);
    }
    with_output(c, [&](std::ostream& os) { io::write_audit(os, report, pick_format(c)); });
    if (c.strict && report.has_fail()) return 3;
    return 0;
}

int cmd_sample(const CliConfig& c) {
    auto spec = make_spec(c);
    double tol = c.tail_tol > 0 ? c.tail_tol : 1e-8;
    SampleBatch batch = sample(spec, c.count, c.seed, tol);
    return with_output(c, [&](std::ostream& os) { io::write_samples(os, batch, pick_format(c)); });
}

int cmd_mc(const CliConfig& c) {
    auto results = verify::mc_negbin1(make_scheme(c), c.n, c.a1, c.samples, c.seed);
    return with_output(c, [&](std::ostream& os) { io::write_mc(os, results, pick_format(c)); });
}

void add_scheme_flags(CLI::App* app, CliConfig& c) {
    app->add_option("--scheme", c.scheme, "bm|js|cj|quesne|custom")->capture_default_str();
    app->add_option("--p", c.p, "preset parameter p")->capture_default_str();
    app->add_option("--q", c.q, "preset parameter q")->capture_default_str();
    app->add_option("--phi1", c.phi1, "custom basis phi1");
    app->add_option("--phi2", c.phi2, "custom basis phi2");
    auto* d = app->add_option("--D", c.D, "custom scale denominator");
    app->final_callback([&c, d] { c.has_D = d->count() > 0; });
    app->add_option("--format", c.format, "csv|json (default: RPQ_DEFAULT_FORMAT or csv)");
    app->add_option("--out", c.out, "output path (default stdout)");
}

void add_family_flags(CLI::App* app, CliConfig& c) {
    app->add_option("--family", c.family, "t1|nt1|t2|nt2")->capture_default_str();
    app->add_option("--n", c.n, "family parameter n")->capture_default_str();
    app->add_option("--a1", c.a1, "first parameter in (0,1)")->capture_default_str();
    app->add_option("--a2", c.a2, "second parameter in (0,1)")->capture_default_str();
    app->add_option("--tail-tol", c.tail_tol, "tail mass tolerance for truncated supports");
    app->add_option("--max-support", c.max_support, "truncation bound cap")->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"R(p,q)-deformed trinomial distributions: tables, moments, audits"};
    app.require_subcommand(1);
    CliConfig c;

    auto* pmf_cmd = app.add_subcommand("pmf", "emit a pmf table");
    add_scheme_flags(pmf_cmd, c);
    add_family_flags(pmf_cmd, c);

    auto* mom = app.add_subcommand("moments", "closed-form factorial moments");
    add_scheme_flags(mom, c);
    add_family_flags(mom, c);
    mom->add_option("--m1", c.m1, "first moment order")->capture_default_str();
    mom->add_option("--m2", c.m2, "second moment order")->capture_default_str();
    mom->add_flag("--verify", c.verify_flag, "cross-check against the summation oracle");

    auto* cov = app.add_subcommand("cov", "corollary covariance");
    add_scheme_flags(cov, c);
    add_family_flags(cov, c);
    cov->add_flag("--verify", c.verify_flag, "cross-check against the summation oracle");

    auto* audit = app.add_subcommand("audit", "run an audit suite");
    add_scheme_flags(audit, c);
    add_family_flags(audit, c);
    audit->add_option("--suite", c.suite, "theorems|specializations|normalization")
        ->capture_default_str();
    audit->add_option("--m1", c.m1, "max moment order for the theorem suite");
    audit->add_option("--tol", c.tol, "pass tolerance")->capture_default_str();
    audit->add_flag("--strict", c.strict, "exit 3 if any non-watchlisted row fails");

    auto* samp = app.add_subcommand("sample", "seeded draws");
    add_scheme_flags(samp, c);
    add_family_flags(samp, c);
    samp->add_option("--count", c.count, "number of draws")->capture_default_str();
    samp->add_option("--seed", c.seed, "rng seed")->capture_default_str();

    auto* mc = app.add_subcommand("mc-check", "Bernoulli-process convention check");
    add_scheme_flags(mc, c);
    mc->add_option("--n", c.n, "number of failures")->capture_default_str();
    mc->add_option("--a1", c.a1, "success weight in (0,1)")->capture_default_str();
    mc->add_option("--samples", c.samples, "simulation count (>= 10^4)")->capture_default_str();
    mc->add_option("--seed", c.seed, "rng seed")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (pmf_cmd->parsed()) return cmd_pmf(c);
        if (mom->parsed()) return cmd_moments(c);
        if (cov->parsed()) return cmd_cov(c);
        if (audit->parsed()) return cmd_audit(c);
        if (samp->parsed()) return cmd_sample(c);
        if (mc->parsed()) return cmd_mc(c);
    } catch (const rpq::truncation_error& e) {
        std::cerr << "truncation failure: " << e.what() << " (bound " << e.bound
                  << ", captured " << e.captured << ")\n";
        return 2;
    } catch (const rpq::validation_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
