#pragma once

#include <string>

namespace rpq {

enum class Preset { BM, JS, CJ, Quesne, Custom };

std::string to_string(Preset p);
Preset preset_from_string(const std::string& s);

/// Two-basis deformation scheme: all deformed quantities are built from the
/// basis pair (phi1, phi2) and the scale denominator D, so that
/// number(n) = (phi1^n - phi2^n) / D.
///
/// The four presets fix (phi1, phi2, D) from (p, q):
///   BM     -> (q,   1/q, q - 1/q)
///   JS     -> (p,   q,   p - q)
///   CJ     -> (1/p, q,   1/p - q)
///   Quesne -> (p,   1/q, q - 1/p)
///
/// BM, JS, CJ have D = phi1 - phi2 (so number(1) = 1); Quesne does not
/// (number(1) = p/q), which is why D is carried explicitly.
struct DeformationScheme {
    Preset preset = Preset::Custom;
    double p = 0.0;      // meaningful for presets only
    double q = 0.0;
    double phi1 = 1.0;
    double phi2 = 1.0;
    double D = 1.0;
    bool limit_mode = false;   // |phi1 - phi2| below epsilon

    static constexpr double kLimitEpsilon = 1e-12;

    static DeformationScheme bm(double q);
    static DeformationScheme js(double p, double q);
    static DeformationScheme cj(double p, double q);
    static DeformationScheme quesne(double p, double q);
    static DeformationScheme preset_scheme(Preset which, double p, double q);
    /// Custom scheme from an explicit basis pair. D defaults to phi1 - phi2
    /// unless that difference is within the limit epsilon, in which case the
    /// limit convention (number(n) = n phi1^{n-1}) applies and D is unused.
    static DeformationScheme custom(double phi1, double phi2);
    static DeformationScheme custom(double phi1, double phi2, double D);

    /// Scheme at inverted parameters (p -> 1/p, q -> 1/q), (phi1, phi2, D)
    /// recomputed by the preset rule. Custom schemes have no inversion rule.
    DeformationScheme inverse() const;

    // Leading/secondary basis: lead() = max(phi1, phi2). The second-kind and
    // negative families are built on the leading base; with lam() < 1 their
    // series converge and every factor stays positive.
    double lead() const { return phi1 >= phi2 ? phi1 : phi2; }
    double sub() const { return phi1 >= phi2 ? phi2 : phi1; }
    double lam() const { return limit_mode ? 1.0 : sub() / lead(); }
    bool mirrored() const { return phi2 > phi1; }

    /// Scale factor c = +-(phi1 - phi2)/D relating the scheme's brackets to
    /// the normalized (D = phi1 - phi2) ones; 1 for BM/JS/CJ.
    double bracket_scale() const {
        if (limit_mode) return 1.0;
        return (lead() - sub()) / (mirrored() ? -D : D);
    }
};

} // namespace rpq
