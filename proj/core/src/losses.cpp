#include "detkit/losses.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace detkit {

double bce_with_logits(double logit, double target) {
    if (!std::isfinite(logit)) {
        throw std::invalid_argument("bce_with_logits: logit must be finite");
    }
    if (!(target >= 0.0 && target <= 1.0)) {
        throw std::invalid_argument("bce_with_logits: target must be in [0, 1]");
    }
    return std::max(logit, 0.0) - logit * target + std::log1p(std::exp(-std::abs(logit)));
}

double giou_loss(const BBox& pred, const BBox& target) {
    return 1.0 - giou(pred, target);
}

namespace {

// Sorted before summing so the result cannot depend on term order.
double mean_or_zero(std::vector<double>& values) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

}  // namespace

LossBreakdown compose_loss(std::span<const BoxTerm> box_terms,
                           std::span<const LogitTerm> obj_terms,
                           std::span<const LogitTerm> cls_terms) {
    std::vector<double> box_values;
    box_values.reserve(box_terms.size());
    for (const BoxTerm& t : box_terms) box_values.push_back(giou_loss(t.pred, t.target));

    std::vector<double> obj_values;
    obj_values.reserve(obj_terms.size());
    for (const LogitTerm& t : obj_terms) obj_values.push_back(bce_with_logits(t.logit, t.target));

    std::vector<double> cls_values;
    cls_values.reserve(cls_terms.size());
    for (const LogitTerm& t : cls_terms) cls_values.push_back(bce_with_logits(t.logit, t.target));

    LossBreakdown out;
    out.box = mean_or_zero(box_values);
    out.obj = mean_or_zero(obj_values);
    out.cls = mean_or_zero(cls_values);
    out.total = out.box + out.obj + out.cls;
    return out;
}

}  // namespace detkit
