#include "detkit/bbox.hpp"

#include <algorithm>
#include <cmath>

namespace detkit {

bool is_valid(const BBox& b) {
    return std::isfinite(b.left) && std::isfinite(b.top) && std::isfinite(b.right) &&
           std::isfinite(b.bottom) && b.left <= b.right && b.top <= b.bottom;
}

double area(const BBox& b) {
    return (b.right - b.left) * (b.bottom - b.top);
}

double intersection_area(const BBox& a, const BBox& b) {
    const double iw = std::min(a.right, b.right) - std::max(a.left, b.left);
    const double ih = std::min(a.bottom, b.bottom) - std::max(a.top, b.top);
    if (iw <= 0.0 || ih <= 0.0) return 0.0;
    return iw * ih;
}

OverlapReport overlap_report(const BBox& a, const BBox& b) {
    OverlapReport r;
    r.intersection_area = intersection_area(a, b);
    r.union_area = area(a) + area(b) - r.intersection_area;
    const double ew = std::max(a.right, b.right) - std::min(a.left, b.left);
    const double eh = std::max(a.bottom, b.bottom) - std::min(a.top, b.top);
    r.enclosing_area = ew * eh;
    r.iou = r.union_area > 0.0 ? r.intersection_area / r.union_area : 0.0;
    r.giou = r.enclosing_area > 0.0
                 ? r.iou - (r.enclosing_area - r.union_area) / r.enclosing_area
                 : r.iou;
    return r;
}

double iou(const BBox& a, const BBox& b) {
    return overlap_report(a, b).iou;
}

double giou(const BBox& a, const BBox& b) {
    return overlap_report(a, b).giou;
}

}  // namespace detkit
