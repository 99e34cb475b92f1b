#pragma once

#include <span>

#include "detkit/bbox.hpp"

namespace detkit {

/// Binary cross-entropy on a raw logit, evaluated with the overflow-safe
/// rearrangement max(x, 0) - x*z + log(1 + exp(-|x|)).
/// `target` must lie in [0, 1]; `logit` must be finite.
double bce_with_logits(double logit, double target);

/// Box regression loss: 1 - giou(pred, target). 0 for a perfect box,
/// approaching 2 for distant disjoint boxes.
double giou_loss(const BBox& pred, const BBox& target);

struct BoxTerm {
    BBox pred;
    BBox target;
};

struct LogitTerm {
    double logit = 0.0;
    double target = 0.0;
};

/// Per-section losses of a detection head: box regression, objectness and
/// classification. total is always the sum of the three parts.
struct LossBreakdown {
    double box = 0.0;
    double obj = 0.0;
    double cls = 0.0;
    double total = 0.0;
};

/// Means of giou_loss / bce_with_logits over each term list; an empty list
/// contributes 0.
LossBreakdown compose_loss(std::span<const BoxTerm> box_terms,
                           std::span<const LogitTerm> obj_terms,
                           std::span<const LogitTerm> cls_terms);

}  // namespace detkit
