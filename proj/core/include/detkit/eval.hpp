#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "detkit/detection_io.hpp"

namespace detkit {

/// Overall mean confidences measured for the full-scale run pair this
/// comparison format was designed around. Reference values only, never
/// asserted by the toolkit.
inline constexpr double kFullRunBaselineMeanConfidence = 0.966;
inline constexpr double kFullRunImprovedMeanConfidence = 0.982;

struct ImageComparison {
    std::string image_id;
    std::size_t baseline_count = 0;
    std::size_t improved_count = 0;
    double baseline_mean_conf = 0.0;  // 0 when the image has no detections
    double improved_mean_conf = 0.0;
    double delta = 0.0;  // improved - baseline
};

/// Image-by-image and global confidence comparison of two detection runs.
/// Global means are detection-weighted: total confidence over total
/// detections across all matched images.
struct ComparisonReport {
    std::vector<ImageComparison> per_image;        // sorted by image_id
    std::vector<std::string> unmatched_baseline;   // stems present on one side only,
    std::vector<std::string> unmatched_improved;   // excluded from all means
    std::size_t matched_pairs = 0;
    std::size_t baseline_detections = 0;
    std::size_t improved_detections = 0;
    double global_baseline_mean = 0.0;
    double global_improved_mean = 0.0;
    double global_delta = 0.0;
};

/// Pure core: pairs files by image_id. Throws detkit::Error when no stems
/// match.
ComparisonReport compare_files(std::span<const DetectionFile> baseline,
                               std::span<const DetectionFile> improved);

/// Reads the .txt detection files of both directories and compares them.
ComparisonReport compare_runs(const std::filesystem::path& baseline_dir,
                              const std::filesystem::path& improved_dir);

/// Column-aligned, byte-deterministic text rendering.
std::string comparison_to_table(const ComparisonReport& report);

}  // namespace detkit
