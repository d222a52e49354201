#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rpq/audit.hpp"
#include "rpq/distributions.hpp"
#include "rpq/mc.hpp"

namespace rpq::io {

enum class Format { Csv, Json };

Format format_from_string(const std::string& s);

/// Doubles serialized with 17 significant digits so audit output
/// round-trips bit-exactly.
std::string fmt_double(double v);

void write_pmf(std::ostream& os, const PmfTable& table, Format fmt);
void write_audit(std::ostream& os, const verify::AuditReport& report, Format fmt);
void write_samples(std::ostream& os, const SampleBatch& batch, Format fmt);

struct MomentRow {
    std::string label;
    double value;
    bool has_oracle = false;
    double oracle = 0.0;
};
void write_moments(std::ostream& os, const std::vector<MomentRow>& rows, Format fmt);

void write_mc(std::ostream& os, const std::array<verify::McResult, 2>& results, Format fmt);

/// Parse a pmf CSV back into entries (for round-trip checks).
std::vector<PmfEntry> parse_pmf_csv(std::istream& is);

} // namespace rpq::io
