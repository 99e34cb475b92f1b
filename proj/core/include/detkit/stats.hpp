#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "detkit/annotation.hpp"

namespace detkit {

/// Aggregates for one class label: object count, share of all objects, and
/// means of box width, height, area, and area as a fraction of its image.
struct ClassStats {
    std::string label;
    std::size_t count = 0;
    double proportion = 0.0;
    double mean_width = 0.0;
    double mean_height = 0.0;
    double mean_area = 0.0;
    double mean_area_fraction = 0.0;
};

struct ImbalanceReport {
    std::vector<ClassStats> per_class;  // count descending, then label ascending
    std::string majority;               // empty when there are no objects
    std::string minority;
    double imbalance_ratio = 0.0;       // majority count / minority count; 0 when empty
    std::size_t total_objects = 0;
};

/// Folds all objects of all records into per-class statistics. The result is
/// independent of record order (per-class sums are taken in sorted order).
/// Ties for majority/minority resolve to the alphabetically first label.
ImbalanceReport compute_stats(std::span<const AnnotationRecord> records);

/// Column-aligned text table: one row per class, then a summary line.
/// Identical reports render to byte-identical text; an empty report renders
/// as the header line only.
std::string stats_to_report(const ImbalanceReport& report);

}  // namespace detkit
