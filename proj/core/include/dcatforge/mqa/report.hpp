#pragma once

#include "dcatforge/mqa/evaluate.hpp"

#include <string>
#include <string_view>

namespace dcatforge::mqa {

enum class ReportFormat { Human, Machine };

/// Human format: per-dimension blocks with a pass mark, points and failure
/// messages per indicator, ending with "Total: N out of M".
/// Machine format: JSON with stable key order, suitable for golden-file
/// diffing; parse_machine_report inverts it exactly.
std::string render_report(const QualityReport& report, ReportFormat format);

QualityReport parse_machine_report(std::string_view text);

} // namespace dcatforge::mqa
