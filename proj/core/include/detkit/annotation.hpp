#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "detkit/bbox.hpp"

namespace detkit {

struct AnnotatedObject {
    std::string label;
    BBox box;
};

/// One ground-truth document: image size plus the labeled boxes, in
/// document order. image_id is the document's filename element when present.
struct AnnotationRecord {
    std::string image_id;
    int image_width = 0;
    int image_height = 0;
    std::vector<AnnotatedObject> objects;

    bool operator==(const AnnotationRecord&) const = default;
};

/// Parses the VOC-style subset: a root element carrying <size> with
/// <width>/<height>, and zero or more <object> elements each with <name>
/// and <bndbox> (<xmin>,<ymin>,<xmax>,<ymax>, integers).
///
/// Throws ParseError (with the offending line) on malformed markup, missing
/// size, non-integer coordinates, inverted boxes, or boxes outside the image.
AnnotationRecord parse_annotation(std::string_view text);

/// Inverse of parse_annotation for the subset above; the output parses back
/// to an equal record.
std::string serialize_annotation(const AnnotationRecord& record);

/// Reads and parses one file; a missing <filename> element falls back to the
/// file stem as image_id.
AnnotationRecord read_annotation_file(const std::filesystem::path& path);

/// All .xml files under dir (recursively), sorted by path.
std::vector<AnnotationRecord> read_annotation_dir(const std::filesystem::path& dir);

}  // namespace detkit
