#include "rpq/report_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rpq/errors.hpp"

namespace rpq::io {

using nlohmann::json;

Format format_from_string(const std::string& s) {
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw validation_error("unknown format: " + s + " (expected csv or json)");
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

json spec_json(const DistributionSpec& spec) {
    return json{{"family", to_string(spec.family)},
                {"scheme", to_string(spec.scheme.preset)},
                {"phi1", spec.scheme.phi1},
                {"phi2", spec.scheme.phi2},
                {"D", spec.scheme.D},
                {"n", spec.n},
                {"a1", spec.a1},
                {"a2", spec.a2}};
}

} // namespace

void write_pmf(std::ostream& os, const PmfTable& table, Format fmt) {
    if (fmt == Format::Csv) {
        if (table.truncated)
            os << "# truncated=true captured_mass=" << fmt_double(table.captured_mass)
               << " truncation_bound=" << table.truncation_bound << "\n";
        os << "y1,y2,prob\n";
        for (const auto& e : table.entries)
            os << e.y1 << "," << e.y2 << "," << fmt_double(e.prob) << "\n";
        return;
    }
    json j;
    j["spec"] = spec_json(table.spec);
    j["truncated"] = table.truncated;
    j["captured_mass"] = fmt_double(table.captured_mass);
    j["truncation_bound"] = table.truncation_bound;
    json rows = json::array();
    for (const auto& e : table.entries)
        rows.push_back({{"y1", e.y1}, {"y2", e.y2}, {"prob", fmt_double(e.prob)}});
    j["entries"] = rows;
    os << j.dump(2) << "\n";
}

void write_audit(std::ostream& os, const verify::AuditReport& report, Format fmt) {
    if (fmt == Format::Csv) {
        os << "label,closed_form,oracle,rel_err,verdict\n";
        for (const auto& r : report.rows)
            os << r.label << "," << fmt_double(r.closed_form) << "," << fmt_double(r.oracle)
               << "," << fmt_double(r.rel_err) << "," << to_string(r.verdict) << "\n";
        return;
    }
    json j;
    j["scheme"] = report.scheme_echo;
    j["tol_finite"] = report.tol_finite;
    j["tol_truncated"] = report.tol_truncated;
    json rows = json::array();
    for (const auto& r : report.rows)
        rows.push_back({{"label", r.label},
                        {"closed_form", fmt_double(r.closed_form)},
                        {"oracle", fmt_double(r.oracle)},
                        {"rel_err", fmt_double(r.rel_err)},
                        {"verdict", to_string(r.verdict)}});
    j["rows"] = rows;
    os << j.dump(2) << "\n";
}

void write_samples(std::ostream& os, const SampleBatch& batch, Format fmt) {
    if (fmt == Format::Csv) {
        os << "# seed=" << batch.seed << " convention=" << batch.convention << "\n";
        os << "y1,y2\n";
        for (const auto& d : batch.draws) os << d.first << "," << d.second << "\n";
        return;
    }
    json j;
    j["spec"] = spec_json(batch.spec);
    j["seed"] = batch.seed;
    j["convention"] = batch.convention;
    json rows = json::array();
    for (const auto& d : batch.draws) rows.push_back({d.first, d.second});
    j["draws"] = rows;
    os << j.dump(2) << "\n";
}

void write_moments(std::ostream& os, const std::vector<MomentRow>& rows, Format fmt) {
    if (fmt == Format::Csv) {
        bool oracle = false;
        for (const auto& r : rows) oracle = oracle || r.has_oracle;
        os << (oracle ? "label,value,oracle\n" : "label,value\n");
        for (const auto& r : rows) {
            os << r.label << "," << fmt_double(r.value);
            if (oracle) os << "," << (r.has_oracle ? fmt_double(r.oracle) : "");
            os << "\n";
        }
        return;
    }
    json j = json::array();
    for (const auto& r : rows) {
        json row{{"label", r.label}, {"value", fmt_double(r.value)}};
        if (r.has_oracle) row["oracle"] = fmt_double(r.oracle);
        j.push_back(row);
    }
    os << j.dump(2) << "\n";
}

void write_mc(std::ostream& os, const std::array<verify::McResult, 2>& results, Format fmt) {
    auto name = [](verify::IndexConvention c) {
        return c == verify::IndexConvention::TrialIndex ? "trial_index" : "failure_count";
    };
    if (fmt == Format::Csv) {
        os << "convention,samples,tv_distance,chi_square,seed\n";
        for (const auto& r : results)
            os << name(r.convention) << "," << r.samples << "," << fmt_double(r.tv_distance)
               << "," << fmt_double(r.chi_square) << "," << r.seed << "\n";
        return;
    }
    json j = json::array();
    for (const auto& r : results)
        j.push_back({{"convention", name(r.convention)},
                     {"samples", r.samples},
                     {"tv_distance", fmt_double(r.tv_distance)},
                     {"chi_square", fmt_double(r.chi_square)},
                     {"seed", r.seed}});
    os << j.dump(2) << "\n";
}

std::vector<PmfEntry> parse_pmf_csv(std::istream& is) {
    std::vector<PmfEntry> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("y1,", 0) == 0) continue;
        std::istringstream ls(line);
        PmfEntry e{};
        char c1 = 0, c2 = 0;
        ls >> e.y1 >> c1 >> e.y2 >> c2 >> e.prob;
        if (!ls || c1 != ',' || c2 != ',')
            throw validation_error("malformed pmf csv line: " + line);
        out.push_back(e);
    }
    return out;
}

} // namespace rpq::io
