#include "dcatforge/mqa/report.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <sstream>

namespace dcatforge::mqa {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string render_human(const QualityReport& report) {
    std::ostringstream out;
    out << "Dataset: " << report.dataset_id << "\n";
    out << "Rubric: " << report.rubric_id << "    Evaluated: " << report.evaluated_at << "\n\n";

    for (const auto& dim : report.dimensions) {
        out << dimension_name(dim.dimension) << " (" << dim.max << " points)\n";
        for (const auto& ind : report.indicators) {
            if (ind.dimension != dim.dimension) continue;
            char points[32];
            std::snprintf(points, sizeof(points), "%3d/%d", ind.awarded, ind.max);
            out << "  " << (ind.passed() ? "✓" : "✗") << " " << ind.indicator_id;
            for (std::size_t i = ind.indicator_id.size(); i < 20; ++i) out << ' ';
            out << points << "\n";
            for (const auto& message : ind.messages) {
                out << "      - " << message << "\n";
            }
        }
        out << "  subtotal: " << dim.points << "/" << dim.max << "\n\n";
    }
    out << "Total: " << report.total << " out of " << report.max_total << "\n";
    return out.str();
}

std::string render_machine(const QualityReport& report) {
    ordered_json doc;
    doc["dataset"] = report.dataset_id;
    doc["rubric"] = report.rubric_id;
    doc["evaluated_at"] = report.evaluated_at;
    doc["total"] = report.total;
    doc["max"] = report.max_total;
    doc["dimensions"] = ordered_json::array();
    for (const auto& dim : report.dimensions) {
        ordered_json entry;
        entry["name"] = std::string(dimension_name(dim.dimension));
        entry["points"] = dim.points;
        entry["max"] = dim.max;
        doc["dimensions"].push_back(std::move(entry));
    }
    doc["indicators"] = ordered_json::array();
    for (const auto& ind : report.indicators) {
        ordered_json entry;
        entry["id"] = ind.indicator_id;
        entry["dimension"] = std::string(dimension_name(ind.dimension));
        entry["awarded"] = ind.awarded;
        entry["max"] = ind.max;
        entry["fraction"] = ind.fraction;
        entry["messages"] = ind.messages;
        doc["indicators"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

} // namespace

std::string render_report(const QualityReport& report, ReportFormat format) {
    switch (format) {
    case ReportFormat::Human: return render_human(report);
    case ReportFormat::Machine: return render_machine(report);
    }
    throw Error("unknown report format");
}

QualityReport parse_machine_report(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("machine report is not valid JSON: ") + e.what());
    }
    try {
        QualityReport report;
        report.dataset_id = doc.at("dataset").get<std::string>();
        report.rubric_id = doc.at("rubric").get<std::string>();
        report.evaluated_at = doc.at("evaluated_at").get<std::string>();
        report.total = doc.at("total").get<int>();
        report.max_total = doc.at("max").get<int>();
        for (const auto& entry : doc.at("dimensions")) {
            DimensionScore dim;
            dim.dimension = parse_dimension(entry.at("name").get<std::string>());
            dim.points = entry.at("points").get<int>();
            dim.max = entry.at("max").get<int>();
            report.dimensions.push_back(dim);
        }
        for (const auto& entry : doc.at("indicators")) {
            IndicatorResult ind;
            ind.indicator_id = entry.at("id").get<std::string>();
            ind.dimension = parse_dimension(entry.at("dimension").get<std::string>());
            ind.awarded = entry.at("awarded").get<int>();
            ind.max = entry.at("max").get<int>();
            ind.fraction = entry.at("fraction").get<double>();
            ind.messages = entry.at("messages").get<std::vector<std::string>>();
            report.indicators.push_back(std::move(ind));
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("machine report misses a field: ") + e.what());
    }
}

} // namespace dcatforge::mqa
