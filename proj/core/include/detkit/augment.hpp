#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>

#include "detkit/gaussian.hpp"

namespace detkit {

struct AugmentReport {
    std::size_t images_written = 0;
    std::size_t skipped = 0;  // unreadable or undecodable inputs
};

/// Blurs every .ppm/.pgm under in_dir (recursively) and writes the result
/// under out_dir with the same relative name. A same-stem .xml annotation
/// next to an image is copied through unchanged.
///
/// Unreadable or corrupt images are skipped and reported through `warn`;
/// failures to create or write outputs abort with an exception.
AugmentReport augment_directory(const std::filesystem::path& in_dir,
                                const std::filesystem::path& out_dir,
                                const GaussianKernelSpec& spec,
                                const std::function<void(const std::string&)>& warn = {});

}  // namespace detkit
