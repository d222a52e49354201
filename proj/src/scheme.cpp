#include "rpq/scheme.hpp"

#include <cmath>

#include "rpq/errors.hpp"

namespace rpq {

std::string to_string(Preset p) {
    switch (p) {
        case Preset::BM: return "bm";
        case Preset::JS: return "js";
        case Preset::CJ: return "cj";
        case Preset::Quesne: return "quesne";
        case Preset::Custom: return "custom";
    }
    return "custom";
}

Preset preset_from_string(const std::string& s) {
    if (s == "bm") return Preset::BM;
    if (s == "js") return Preset::JS;
    if (s == "cj") return Preset::CJ;
    if (s == "quesne") return Preset::Quesne;
    if (s == "custom") return Preset::Custom;
    throw validation_error("unknown scheme name: " + s);
}

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw validation_error(std::string(name) + " must be positive and finite");
}

DeformationScheme finish(DeformationScheme s) {
    s.limit_mode = std::abs(s.phi1 - s.phi2) < DeformationScheme::kLimitEpsilon;
    if (!s.limit_mode && std::abs(s.D) < DeformationScheme::kLimitEpsilon)
        throw validation_error("scale denominator D is zero for a non-degenerate basis");
    return s;
}

} // namespace

DeformationScheme DeformationScheme::bm(double q) {
    require_positive(q, "q");
    DeformationScheme s;
    s.preset = Preset::BM;
    s.p = q;  // single-parameter algebra; p slot mirrors q
    s.q = q;
    s.phi1 = q;
    s.phi2 = 1.0 / q;
    s.D = q - 1.0 / q;
    return finish(s);
}

DeformationScheme DeformationScheme::js(double p, double q) {
    require_positive(p, "p");
    require_positive(q, "q");
    // Paper regime for this preset.
    if (!(q < p && p < 1.0))
        throw validation_error("js preset requires 0 < q < p < 1");
    DeformationScheme s;
    s.preset = Preset::JS;
    s.p = p;
    s.q = q;
    s.phi1 = p;
    s.phi2 = q;
    s.D = p - q;
    return finish(s);
}

DeformationScheme DeformationScheme::cj(double p, double q) {
    require_positive(p, "p");
    require_positive(q, "q");
    DeformationScheme s;
    s.preset = Preset::CJ;
    s.p = p;
    s.q = q;
    s.phi1 = 1.0 / p;
    s.phi2 = q;
    s.D = 1.0 / p - q;
    return finish(s);
}

DeformationScheme DeformationScheme::quesne(double p, double q) {
    require_positive(p, "p");
    require_positive(q, "q");
    DeformationScheme s;
    s.preset = Preset::Quesne;
    s.p = p;
    s.q = q;
    s.phi1 = p;
    s.phi2 = 1.0 / q;
    s.D = q - 1.0 / p;
    return finish(s);
}

DeformationScheme DeformationScheme::preset_scheme(Preset which, double p, double q) {
    switch (which) {
        case Preset::BM: return bm(q);
        case Preset::JS: return js(p, q);
        case Preset::CJ: return cj(p, q);
        case Preset::Quesne: return quesne(p, q);
        case Preset::Custom: break;
    }
    throw validation_error("custom scheme requires explicit phi1/phi2");
}

DeformationScheme DeformationScheme::custom(double phi1, double phi2) {
    require_positive(phi1, "phi1");
    require_positive(phi2, "phi2");
    DeformationScheme s;
    s.preset = Preset::Custom;
    s.phi1 = phi1;
    s.phi2 = phi2;
    s.D = phi1 - phi2;
    s.limit_mode = std::abs(phi1 - phi2) < kLimitEpsilon;
    if (s.limit_mode) s.D = 1.0;  // unused by number() in limit mode
    return s;
}

DeformationScheme DeformationScheme::custom(double phi1, double phi2, double D) {
    require_positive(phi1, "phi1");
    require_positive(phi2, "phi2");
    if (D == 0.0 || !std::isfinite(D))
        throw validation_error("D must be nonzero and finite");
    DeformationScheme s;
    s.preset = Preset::Custom;
    s.phi1 = phi1;
    s.phi2 = phi2;
    s.D = D;
    s.limit_mode = std::abs(phi1 - phi2) < kLimitEpsilon;
    return s;
}

DeformationScheme DeformationScheme::inverse() const {
    DeformationScheme s;
    switch (preset) {
        case Preset::BM:
            s.preset = Preset::BM;
            s.p = s.q = 1.0 / q;
            s.phi1 = 1.0 / q;
            s.phi2 = q;
            s.D = 1.0 / q - q;
            break;
        case Preset::JS:
            // bypass the 0<q<p<1 regime check: inverted parameters exceed 1
            s.preset = Preset::JS;
            s.p = 1.0 / p;
            s.q = 1.0 / q;
            s.phi1 = s.p;
            s.phi2 = s.q;
            s.D = s.p - s.q;
            break;
        case Preset::CJ:
            s.preset = Preset::CJ;
            s.p = 1.0 / p;
            s.q = 1.0 / q;
            s.phi1 = p;
            s.phi2 = 1.0 / q;
            s.D = p - 1.0 / q;
            break;
        case Preset::Quesne:
            s.preset = Preset::Quesne;
            s.p = 1.0 / p;
            s.q = 1.0 / q;
            s.phi1 = 1.0 / p;
            s.phi2 = q;
            s.D = 1.0 / q - p;
            break;
        case Preset::Custom:
            throw validation_error("custom scheme has no parameter inversion rule");
    }
    s.limit_mode = std::abs(s.phi1 - s.phi2) < kLimitEpsilon;
    return s;
}

} // namespace rpq
