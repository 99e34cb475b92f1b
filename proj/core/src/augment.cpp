#include "detkit/augment.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

#include "detkit/error.hpp"

namespace fs = std::filesystem;

namespace detkit {

namespace {

std::string lower_extension(const fs::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext;
}

bool is_supported_image(const fs::path& p) {
    const std::string ext = lower_extension(p);
    return ext == ".ppm" || ext == ".pgm";
}

}  // namespace

AugmentReport augment_directory(const fs::path& in_dir, const fs::path& out_dir,
                                const GaussianKernelSpec& spec,
                                const std::function<void(const std::string&)>& warn) {
    if (!is_valid(spec)) throw std::invalid_argument("augment_directory: invalid kernel spec");
    if (!fs::is_directory(in_dir)) {
        throw Error("input directory does not exist: " + in_dir.string());
    }
    fs::create_directories(out_dir);

    std::vector<fs::path> images;
    for (const auto& entry : fs::recursive_directory_iterator(in_dir)) {
        if (entry.is_regular_file() && is_supported_image(entry.path())) {
            images.push_back(entry.path());
        }
    }
    std::sort(images.begin(), images.end());

    AugmentReport report;
    for (const fs::path& src : images) {
        const fs::path rel = fs::relative(src, in_dir);
        ImagePlane img;
        try {
            img = read_image(src);
        } catch (const Error& e) {
            ++report.skipped;
            if (warn) warn("skipping " + rel.string() + ": " + e.what());
            continue;
        }
        const ImagePlane blurred = blur_plane_separable(img, spec);

        const fs::path dst = out_dir / rel;
        fs::create_directories(dst.parent_path());
        write_image(dst, blurred);
        ++report.images_written;

        // Carry the paired annotation along, byte for byte.
        fs::path ann = src;
        ann.replace_extension(".xml");
        if (fs::is_regular_file(ann)) {
            fs::path ann_dst = dst;
            ann_dst.replace_extension(".xml");
            fs::copy_file(ann, ann_dst, fs::copy_options::overwrite_existing);
        }
    }
    return report;
}

}  // namespace detkit
