#pragma once

#include <string>
#include <vector>

#include "rpq/distributions.hpp"
#include "rpq/verify.hpp"

namespace rpq::verify {

enum class Verdict { Pass, Fail, SuspectedTypo };

std::string to_string(Verdict v);

struct AuditRow {
    std::string label;
    double closed_form = 0.0;
    double oracle = 0.0;
    double rel_err = 0.0;
    Verdict verdict = Verdict::Pass;
};

struct AuditReport {
    std::string scheme_echo;   // preset/parameter echo
    double tol_finite = 1e-9;
    double tol_truncated = 1e-8;
    std::vector<AuditRow> rows;

    bool has_fail() const;
    std::size_t count(Verdict v) const;
};

/// Relative error with an absolute floor of 1e-14 near zero.
double rel_err(double a, double b);

struct TheoremAuditConfig {
    DeformationScheme scheme;
    double a1 = 0.5;
    double a2 = 0.5;
    long long max_n = 6;
    long long max_order = 2;
    double tol_finite = 1e-9;
    double tol_truncated = 1e-8;
    double tail_tol = 1e-10;
    bool printed_rows = true;  // include paper-printed readings (watchlisted)
};

/// One row per theorem equation x order combination x n, comparing the
/// closed form with the direct-summation oracle; printed readings and the
/// inverse-relation identities ride along as watchlisted evidence rows.
AuditReport audit_theorems(const TheoremAuditConfig& cfg);

struct NormalizationPoint {
    DeformationScheme scheme;
    std::string scheme_name;
    Family family;
    long long n;
    double a1, a2;
};

AuditReport normalization_sweep(const std::vector<NormalizationPoint>& grid,
                                double tol_finite = 1e-10, double tail_tol = 1e-8,
                                bool printed_rows = false);

/// Section-3 transcription audit: the per-algebra printed formulas evaluated
/// verbatim against the general printed formulas specialized to the preset.
/// Internally consistent rows PASS; transcription slips (leftover p symbols,
/// flipped exponent signs) surface as SUSPECTED_TYPO with both values.
AuditReport audit_specializations(Preset preset, double p = 0.9, double q = 0.5);

} // namespace rpq::verify
