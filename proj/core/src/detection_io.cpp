#include "detkit/detection_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "detkit/error.hpp"

namespace fs = std::filesystem;

namespace detkit {

namespace {

double parse_number(std::string_view token, const char* what, std::size_t line_no) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) {
        throw ParseError(std::string(what) + " is not a number: '" + std::string(token) + "'",
                         line_no);
    }
    return value;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

}  // namespace

std::string format_detection_line(const Detection& det) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), "%s %.3f %.2f %.2f %.2f %.2f", det.label.c_str(),
                  det.confidence, det.box.left, det.box.top, det.box.right, det.box.bottom);
    return buf;
}

std::string serialize_detection_file(const DetectionFile& file) {
    std::string out;
    for (const Detection& det : file.detections) {
        out += format_detection_line(det);
        out += '\n';
    }
    return out;
}

void write_detection_file(const DetectionFile& file, const fs::path& path) {
    const std::string text = serialize_detection_file(file);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open detection file for writing: " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw Error("failed writing detection file: " + path.string());
}

DetectionFile parse_detection_file(std::string_view text, std::string image_id) {
    DetectionFile file;
    file.image_id = std::move(image_id);

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start >= text.size()) break;
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;

        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const std::vector<std::string_view> fields = split_fields(line);
        if (fields.empty()) continue;  // blank line
        if (fields.size() != 6) {
            throw ParseError("expected 6 fields (label confidence left top right bottom), got " +
                                 std::to_string(fields.size()),
                             line_no);
        }

        Detection det;
        det.label = std::string(fields[0]);
        det.confidence = parse_number(fields[1], "confidence", line_no);
        if (det.confidence < 0.0 || det.confidence > 1.0) {
            throw ParseError("confidence out of range [0,1]: " + std::string(fields[1]), line_no);
        }
        det.box.left = parse_number(fields[2], "left", line_no);
        det.box.top = parse_number(fields[3], "top", line_no);
        det.box.right = parse_number(fields[4], "right", line_no);
        det.box.bottom = parse_number(fields[5], "bottom", line_no);
        if (!is_valid(det.box)) {
            throw ParseError("invalid box: right < left or bottom < top", line_no);
        }
        file.detections.push_back(std::move(det));
    }
    return file;
}

DetectionFile read_detection_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open detection file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_detection_file(buffer.str(), path.stem().string());
    } catch (const ParseError& e) {
        throw Error(path.string() + ": " + e.what());
    }
}

std::vector<DetectionFile> read_detection_dir(const fs::path& dir) {
    if (!fs::is_directory(dir)) {
        throw Error("detection directory does not exist: " + dir.string());
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<DetectionFile> out;
    out.reserve(files.size());
    for (const fs::path& f : files) out.push_back(read_detection_file(f));
    return out;
}

}  // namespace detkit
