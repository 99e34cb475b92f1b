#include "detkit/detection.hpp"

#include <algorithm>
#include <stdexcept>

namespace detkit {

void validate(const NmsConfig& cfg) {
    if (!(cfg.iou_thresh > 0.0 && cfg.iou_thresh <= 1.0)) {
        throw std::invalid_argument("thresh must be in (0,1]");
    }
    if (cfg.topk == 0) {
        throw std::invalid_argument("topk must be positive");
    }
}

HeadShape head_output_shape(int grid, int num_classes) {
    if (grid < 1) throw std::invalid_argument("grid must be >= 1");
    if (num_classes < 1) throw std::invalid_argument("num_classes must be >= 1");
    HeadShape shape;
    shape.grid = grid;
    shape.num_classes = num_classes;
    shape.channels = shape.anchors_per_cell * (4 + 1 + num_classes);
    return shape;
}

std::vector<Detection> topk_filter(std::vector<Detection> detections, std::size_t k) {
    if (k == 0) throw std::invalid_argument("topk must be positive");
    std::stable_sort(detections.begin(), detections.end(),
                     [](const Detection& a, const Detection& b) {
                         return a.confidence > b.confidence;
                     });
    if (detections.size() > k) detections.resize(k);
    return detections;
}

std::vector<Detection> nms(std::vector<Detection> detections, const NmsConfig& cfg) {
    validate(cfg);
    std::vector<Detection> ranked = topk_filter(std::move(detections), cfg.topk);
    std::vector<Detection> kept;
    kept.reserve(ranked.size());
    for (Detection& candidate : ranked) {
        bool suppressed = false;
        for (const Detection& keeper : kept) {
            if (!cfg.class_agnostic && keeper.label != candidate.label) continue;
            if (iou(keeper.box, candidate.box) > cfg.iou_thresh) {
                suppressed = true;
                break;
            }
        }
        if (!suppressed) kept.push_back(std::move(candidate));
    }
    return kept;
}

}  // namespace detkit
