#include "detkit/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace detkit {

bool is_valid(const GaussianKernelSpec& spec) {
    return std::isfinite(spec.sigma) && spec.sigma > 0.0 && spec.radius >= 1;
}

double gaussian_density_nd(double r, double sigma, int dims) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("gaussian_density_nd: sigma must be positive");
    }
    if (dims < 1) throw std::invalid_argument("gaussian_density_nd: dims must be >= 1");
    const double s2 = sigma * sigma;
    const double norm = std::pow(1.0 / std::sqrt(2.0 * std::numbers::pi * s2), dims);
    return norm * std::exp(-(r * r) / (2.0 * s2));
}

double gaussian_density_2d(double u, double v, double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("gaussian_density_2d: sigma must be positive");
    }
    const double s2 = sigma * sigma;
    return 1.0 / (2.0 * std::numbers::pi * s2) * std::exp(-(u * u + v * v) / (2.0 * s2));
}

std::vector<double> gaussian_weights_1d(double sigma, int radius) {
    if (!is_valid(GaussianKernelSpec{sigma, radius})) {
        throw std::invalid_argument("gaussian_weights_1d: invalid spec");
    }
    std::vector<double> w(static_cast<std::size_t>(2 * radius + 1));
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        const double g = gaussian_density_nd(static_cast<double>(i), sigma, 1);
        w[static_cast<std::size_t>(i + radius)] = g;
        sum += g;
    }
    for (double& v : w) v /= sum;
    return w;
}

KernelMatrix build_kernel(const GaussianKernelSpec& spec) {
    if (!is_valid(spec)) throw std::invalid_argument("build_kernel: invalid spec");
    KernelMatrix k;
    k.size = 2 * spec.radius + 1;
    k.weights.resize(static_cast<std::size_t>(k.size) * k.size);
    double sum = 0.0;
    for (int dy = -spec.radius; dy <= spec.radius; ++dy) {
        for (int dx = -spec.radius; dx <= spec.radius; ++dx) {
            const double g = gaussian_density_2d(dx, dy, spec.sigma);
            k.weights[static_cast<std::size_t>(dy + spec.radius) * k.size +
                      (dx + spec.radius)] = g;
            sum += g;
        }
    }
    for (double& w : k.weights) w /= sum;
    return k;
}

namespace {

// Mirror reflection including the edge pixel: -1 -> 0, -2 -> 1, n -> n-1.
int mirror_index(int i, int n) {
    while (i < 0 || i >= n) {
        if (i < 0) i = -i - 1;
        if (i >= n) i = 2 * n - 1 - i;
    }
    return i;
}

std::uint8_t quantize(double v) {
    const double rounded = std::floor(v + 0.5);  // half-up
    return static_cast<std::uint8_t>(std::clamp(rounded, 0.0, 255.0));
}

void check_blur_args(const ImagePlane& img, int kernel_size) {
    if (!is_valid(img)) throw std::invalid_argument("blur: invalid image");
    if (kernel_size > 2 * std::min(img.width, img.height) + 1) {
        throw std::invalid_argument("blur: kernel larger than image permits");
    }
}

}  // namespace

ImagePlane blur_plane(const ImagePlane& img, const KernelMatrix& kernel) {
    check_blur_args(img, kernel.size);
    const int r = kernel.radius();
    ImagePlane out = img;
    for (int c = 0; c < img.channels; ++c) {
        for (int y = 0; y < img.height; ++y) {
            for (int x = 0; x < img.width; ++x) {
                double acc = 0.0;
                for (int dy = -r; dy <= r; ++dy) {
                    const int sy = mirror_index(y + dy, img.height);
                    for (int dx = -r; dx <= r; ++dx) {
                        const int sx = mirror_index(x + dx, img.width);
                        acc += kernel.at_offset(dx, dy) * img.at(c, sx, sy);
                    }
                }
                out.at(c, x, y) = quantize(acc);
            }
        }
    }
    return out;
}

ImagePlane blur_plane_separable(const ImagePlane& img, const GaussianKernelSpec& spec) {
    check_blur_args(img, 2 * spec.radius + 1);
    const std::vector<double> w = gaussian_weights_1d(spec.sigma, spec.radius);
    const int r = spec.radius;
    ImagePlane out = img;
    std::vector<double> tmp(static_cast<std::size_t>(img.width) * img.height);
    for (int c = 0; c < img.channels; ++c) {
        for (int y = 0; y < img.height; ++y) {
            for (int x = 0; x < img.width; ++x) {
                double acc = 0.0;
                for (int dx = -r; dx <= r; ++dx) {
                    acc += w[static_cast<std::size_t>(dx + r)] *
                           img.at(c, mirror_index(x + dx, img.width), y);
                }
                tmp[static_cast<std::size_t>(y) * img.width + x] = acc;
            }
        }
        for (int y = 0; y < img.height; ++y) {
            for (int x = 0; x < img.width; ++x) {
                double acc = 0.0;
                for (int dy = -r; dy <= r; ++dy) {
                    acc += w[static_cast<std::size_t>(dy + r)] *
                           tmp[static_cast<std::size_t>(mirror_index(y + dy, img.height)) *
                                   img.width +
                               x];
                }
                out.at(c, x, y) = quantize(acc);
            }
        }
    }
    return out;
}

}  // namespace detkit
