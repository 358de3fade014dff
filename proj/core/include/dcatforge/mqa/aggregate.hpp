#pragma once

#include "dcatforge/mqa/evaluate.hpp"

#include <map>
#include <vector>

namespace dcatforge::mqa {

class EmptyFleet : public Error {
public:
    using Error::Error;
};

struct Stats {
    double mean = 0.0;
    double median = 0.0;
    double stddev = 0.0; // population standard deviation

    friend bool operator==(const Stats&, const Stats&) = default;
};

struct CatalogStats {
    std::map<Dimension, Stats> dimensions;
    Stats total;
    std::size_t fleet_size = 0;
};

/// Computes per-dimension and total statistics over a fleet of reports.
/// Median of an even-sized fleet is the mean of the two middle values;
/// standard deviation is the population form. Throws EmptyFleet on an empty
/// input.
CatalogStats aggregate_catalog(const std::vector<QualityReport>& reports);

/// Stats over a raw series (exposed for the catalog roll-up and the CLI).
Stats series_stats(std::vector<double> values);

} // namespace dcatforge::mqa
