#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace detkit {

/// 8-bit image stored as planar channel grids (channel-major, then row-major).
/// channels is 1 (grayscale) or 3 (RGB).
struct ImagePlane {
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<std::uint8_t> pixels;  // width * height * channels bytes

    std::uint8_t at(int channel, int x, int y) const {
        return pixels[static_cast<std::size_t>(channel) * width * height +
                      static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int channel, int x, int y) {
        return pixels[static_cast<std::size_t>(channel) * width * height +
                      static_cast<std::size_t>(y) * width + x];
    }

    bool operator==(const ImagePlane&) const = default;
};

ImagePlane make_plane(int width, int height, int channels, std::uint8_t fill = 0);

bool is_valid(const ImagePlane& img);

/// Decodes a binary PGM (P5) or PPM (P6) document with 8-bit samples.
/// Throws detkit::Error on malformed headers or truncated pixel data.
ImagePlane decode_image(std::span<const std::uint8_t> bytes);

/// Encodes as P5 for 1 channel, P6 for 3 channels. The header is always
/// "P5\n<w> <h>\n255\n" / "P6\n<w> <h>\n255\n", so output is byte-deterministic.
std::vector<std::uint8_t> encode_image(const ImagePlane& img);

ImagePlane read_image(const std::filesystem::path& path);
void write_image(const std::filesystem::path& path, const ImagePlane& img);

}  // namespace detkit
