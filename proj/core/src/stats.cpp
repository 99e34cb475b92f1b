#include "detkit/stats.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "detkit/bbox.hpp"

namespace detkit {

namespace {

struct Samples {
    std::vector<double> widths;
    std::vector<double> heights;
    std::vector<double> areas;
    std::vector<double> area_fractions;
};

double sorted_mean(std::vector<double>& values) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

std::string fixed(double v, int width, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%*.*f", width, precision, v);
    return buf;
}

}  // namespace

ImbalanceReport compute_stats(std::span<const AnnotationRecord> records) {
    std::map<std::string, Samples> by_label;
    std::size_t total = 0;
    for (const AnnotationRecord& rec : records) {
        const double image_area =
            static_cast<double>(rec.image_width) * static_cast<double>(rec.image_height);
        for (const AnnotatedObject& obj : rec.objects) {
            Samples& s = by_label[obj.label];
            s.widths.push_back(obj.box.width());
            s.heights.push_back(obj.box.height());
            s.areas.push_back(area(obj.box));
            s.area_fractions.push_back(area(obj.box) / image_area);
            ++total;
        }
    }

    ImbalanceReport report;
    report.total_objects = total;
    if (total == 0) return report;

    std::size_t majority_count = 0;
    std::size_t minority_count = 0;
    for (auto& [label, samples] : by_label) {
        ClassStats cs;
        cs.label = label;
        cs.count = samples.widths.size();
        cs.proportion = static_cast<double>(cs.count) / static_cast<double>(total);
        cs.mean_width = sorted_mean(samples.widths);
        cs.mean_height = sorted_mean(samples.heights);
        cs.mean_area = sorted_mean(samples.areas);
        cs.mean_area_fraction = sorted_mean(samples.area_fractions);
        report.per_class.push_back(std::move(cs));

        // Map iteration is alphabetical, so strict comparisons give the
        // alphabetically first label on ties.
        if (report.majority.empty() || report.per_class.back().count > majority_count) {
            majority_count = report.per_class.back().count;
            report.majority = label;
        }
        if (report.minority.empty() || report.per_class.back().count < minority_count) {
            minority_count = report.per_class.back().count;
            report.minority = label;
        }
    }
    report.imbalance_ratio =
        static_cast<double>(majority_count) / static_cast<double>(minority_count);

    std::stable_sort(report.per_class.begin(), report.per_class.end(),
                     [](const ClassStats& a, const ClassStats& b) { return a.count > b.count; });
    return report;
}

std::string stats_to_report(const ImbalanceReport& report) {
    std::size_t label_width = 5;  // "class"
    for (const ClassStats& cs : report.per_class) {
        label_width = std::max(label_width, cs.label.size());
    }

    std::string out;
    char header[512];
    std::snprintf(header, sizeof(header), "%-*s %8s %10s %10s %11s %12s %13s\n",
                  static_cast<int>(label_width), "class", "count", "proportion", "mean_width",
                  "mean_height", "mean_area", "area_fraction");
    out += header;

    for (const ClassStats& cs : report.per_class) {
        char row[512];
        std::snprintf(row, sizeof(row), "%-*s %8zu %10s %10s %11s %12s %13s\n",
                      static_cast<int>(label_width), cs.label.c_str(), cs.count,
                      fixed(cs.proportion, 10, 6).c_str(), fixed(cs.mean_width, 10, 2).c_str(),
                      fixed(cs.mean_height, 11, 2).c_str(), fixed(cs.mean_area, 12, 2).c_str(),
                      fixed(cs.mean_area_fraction, 13, 6).c_str());
        out += row;
    }

    if (report.total_objects > 0) {
        char summary[512];
        std::snprintf(summary, sizeof(summary),
                      "majority %s  minority %s  imbalance_ratio %.6f  objects %zu\n",
                      report.majority.c_str(), report.minority.c_str(), report.imbalance_ratio,
                      report.total_objects);
        out += summary;
    }
    return out;
}

}  // namespace detkit
