#include "detkit/image.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>
#include <string>

#include "detkit/error.hpp"

namespace detkit {

ImagePlane make_plane(int width, int height, int channels, std::uint8_t fill) {
    ImagePlane img;
    img.width = width;
    img.height = height;
    img.channels = channels;
    if (!(width > 0 && height > 0 && (channels == 1 || channels == 3))) {
        throw std::invalid_argument("make_plane: bad dimensions");
    }
    img.pixels.assign(static_cast<std::size_t>(width) * height * channels, fill);
    return img;
}

bool is_valid(const ImagePlane& img) {
    return img.width > 0 && img.height > 0 && (img.channels == 1 || img.channels == 3) &&
           img.pixels.size() ==
               static_cast<std::size_t>(img.width) * img.height * img.channels;
}

namespace {

class PnmReader {
public:
    explicit PnmReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    // Header tokens are separated by whitespace; '#' starts a comment that
    // runs to end of line.
    std::string next_token() {
        skip_space_and_comments();
        if (pos_ >= bytes_.size()) throw Error("pnm: unexpected end of header");
        std::string tok;
        while (pos_ < bytes_.size() && !std::isspace(bytes_[pos_])) {
            tok.push_back(static_cast<char>(bytes_[pos_++]));
        }
        return tok;
    }

    int next_int(const char* what) {
        const std::string tok = next_token();
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw Error(std::string("pnm: bad ") + what + " '" + tok + "'");
        }
        if (used != tok.size()) {
            throw Error(std::string("pnm: bad ") + what + " '" + tok + "'");
        }
        return value;
    }

    // The header ends with exactly one whitespace byte before the raster.
    std::span<const std::uint8_t> raster() {
        if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
            throw Error("pnm: missing whitespace before pixel data");
        }
        ++pos_;
        return bytes_.subspan(pos_);
    }

private:
    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            if (std::isspace(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

ImagePlane decode_image(std::span<const std::uint8_t> bytes) {
    PnmReader reader(bytes);
    const std::string magic = reader.next_token();
    int channels = 0;
    if (magic == "P5") {
        channels = 1;
    } else if (magic == "P6") {
        channels = 3;
    } else {
        throw Error("pnm: unsupported magic '" + magic + "' (want P5 or P6)");
    }
    const int width = reader.next_int("width");
    const int height = reader.next_int("height");
    if (width <= 0 || height <= 0) throw Error("pnm: non-positive image size");
    const int maxval = reader.next_int("maxval");
    if (maxval <= 0 || maxval > 255) {
        throw Error("pnm: unsupported maxval " + std::to_string(maxval));
    }

    const std::span<const std::uint8_t> raster = reader.raster();
    const std::size_t needed = static_cast<std::size_t>(width) * height * channels;
    if (raster.size() < needed) throw Error("pnm: truncated pixel data");

    ImagePlane img = make_plane(width, height, channels);
    // De-interleave the raster into channel planes.
    std::size_t i = 0;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            for (int c = 0; c < channels; ++c) {
                img.at(c, x, y) = raster[i++];
            }
        }
    }
    return img;
}

std::vector<std::uint8_t> encode_image(const ImagePlane& img) {
    if (!is_valid(img)) throw std::invalid_argument("encode_image: invalid image");
    const std::string header = std::string(img.channels == 1 ? "P5" : "P6") + "\n" +
                               std::to_string(img.width) + " " +
                               std::to_string(img.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.reserve(out.size() + img.pixels.size());
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            for (int c = 0; c < img.channels; ++c) {
                out.push_back(img.at(c, x, y));
            }
        }
    }
    return out;
}

ImagePlane read_image(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open image file: " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return decode_image(bytes);
}

void write_image(const std::filesystem::path& path, const ImagePlane& img) {
    const std::vector<std::uint8_t> bytes = encode_image(img);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open image file for writing: " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("failed writing image file: " + path.string());
}

}  // namespace detkit
