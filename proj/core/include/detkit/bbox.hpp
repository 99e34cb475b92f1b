#pragma once

namespace detkit {

/// Axis-aligned box in continuous pixel coordinates. Boxes are closed real
/// intervals; a zero-width or zero-height (degenerate) box is legal.
struct BBox {
    double left = 0.0;
    double top = 0.0;
    double right = 0.0;
    double bottom = 0.0;

    double width() const { return right - left; }
    double height() const { return bottom - top; }

    bool operator==(const BBox&) const = default;
};

/// True when all coordinates are finite, left <= right and top <= bottom.
bool is_valid(const BBox& b);

/// (right - left) * (bottom - top). No +1 pixel correction.
double area(const BBox& b);

double intersection_area(const BBox& a, const BBox& b);

/// The overlap terms for a pair of boxes, bundled for diagnostics.
struct OverlapReport {
    double intersection_area = 0.0;
    double union_area = 0.0;
    double enclosing_area = 0.0;  // smallest axis-aligned box covering both
    double iou = 0.0;
    double giou = 0.0;
};

OverlapReport overlap_report(const BBox& a, const BBox& b);

/// Intersection over union in [0, 1]. A pair with zero union area yields 0.
double iou(const BBox& a, const BBox& b);

/// Generalized IoU in [-1, 1]: iou minus the fraction of the enclosing box
/// not covered by the union. Degenerates to iou when the enclosing area is 0.
double giou(const BBox& a, const BBox& b);

}  // namespace detkit
