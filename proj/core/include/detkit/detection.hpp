#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "detkit/bbox.hpp"

namespace detkit {

/// One detector output: class label, confidence in [0, 1], and box.
struct Detection {
    std::string label;
    double confidence = 0.0;
    BBox box;

    bool operator==(const Detection&) const = default;
};

struct NmsConfig {
    double iou_thresh = 0.45;   // suppress at iou strictly above this
    std::size_t topk = 400;     // confidence-ranked truncation before suppression
    bool class_agnostic = false;
};

/// Throws std::invalid_argument unless iou_thresh is in (0, 1] and topk >= 1.
void validate(const NmsConfig& cfg);

/// Output tensor shape of a detection head over an n x n grid with m classes:
/// 3 anchors per cell, each predicting 4 box offsets + 1 objectness + m class
/// scores, so channels = 3 * (4 + 1 + m).
struct HeadShape {
    int grid = 0;
    int num_classes = 0;
    int anchors_per_cell = 3;
    int channels = 0;

    long long cells() const { return static_cast<long long>(grid) * grid; }
};

HeadShape head_output_shape(int grid, int num_classes);

/// At most k detections, sorted by confidence descending. Ties keep their
/// input order (stable).
std::vector<Detection> topk_filter(std::vector<Detection> detections, std::size_t k);

/// Greedy per-class non-maximum suppression after top-k truncation: keep the
/// highest-confidence remaining detection, drop same-label detections whose
/// iou with it exceeds cfg.iou_thresh, repeat. Output in keep order.
std::vector<Detection> nms(std::vector<Detection> detections, const NmsConfig& cfg = {});

}  // namespace detkit
