#include "dcatforge/mqa/aggregate.hpp"

#include <algorithm>
#include <cmath>

namespace dcatforge::mqa {

Stats series_stats(std::vector<double> values) {
    if (values.empty()) throw EmptyFleet("statistics over an empty series");
    Stats s;
    double sum = 0.0;
    for (const double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());

    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    s.median = n % 2 == 1 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;

    double sq = 0.0;
    for (const double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(n));
    return s;
}

CatalogStats aggregate_catalog(const std::vector<QualityReport>& reports) {
    if (reports.empty()) throw EmptyFleet("aggregate_catalog over an empty fleet");

    CatalogStats out;
    out.fleet_size = reports.size();

    std::map<Dimension, std::vector<double>> per_dimension;
    std::vector<double> totals;
    totals.reserve(reports.size());
    for (const auto& report : reports) {
        totals.push_back(static_cast<double>(report.total));
        for (const auto& dim : report.dimensions) {
            per_dimension[dim.dimension].push_back(static_cast<double>(dim.points));
        }
    }
    for (auto& [dimension, values] : per_dimension) {
        out.dimensions[dimension] = series_stats(std::move(values));
    }
    out.total = series_stats(std::move(totals));
    return out;
}

} // namespace dcatforge::mqa
