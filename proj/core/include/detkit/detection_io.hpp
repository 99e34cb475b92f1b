#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "detkit/detection.hpp"

namespace detkit {

/// One per-image result document; order of detections is preserved.
struct DetectionFile {
    std::string image_id;  // file stem
    std::vector<Detection> detections;

    bool operator==(const DetectionFile&) const = default;
};

/// "<label> <confidence:%.3f> <left:%.2f> <top:%.2f> <right:%.2f> <bottom:%.2f>"
/// with single spaces, no trailing whitespace.
std::string format_detection_line(const Detection& det);

/// One line per detection, LF endings, byte-deterministic. An empty file
/// serializes to an empty string.
std::string serialize_detection_file(const DetectionFile& file);

void write_detection_file(const DetectionFile& file, const std::filesystem::path& path);

/// Inverse of the writer up to formatting quantization. Repeated spaces and
/// trailing whitespace are tolerated; blank lines are skipped. Throws
/// ParseError (with line number) on a wrong field count, a non-numeric field,
/// confidence outside [0, 1], or an inverted box.
DetectionFile parse_detection_file(std::string_view text, std::string image_id = {});

/// Reads and parses one file; image_id is the file stem.
DetectionFile read_detection_file(const std::filesystem::path& path);

/// All .txt files under dir (non-recursive), sorted by image_id.
std::vector<DetectionFile> read_detection_dir(const std::filesystem::path& dir);

}  // namespace detkit
