#pragma once

#include <vector>

#include "detkit/image.hpp"

namespace detkit {

/// Parameters of a square Gaussian blur kernel: standard deviation and
/// half-width. The resulting grid is (2*radius+1) x (2*radius+1); radius 1
/// gives the classic nine-point window.
struct GaussianKernelSpec {
    double sigma = 1.0;
    int radius = 1;
};

bool is_valid(const GaussianKernelSpec& spec);

/// Discrete weight grid, normalized so the weights sum to 1.
struct KernelMatrix {
    int size = 0;                  // odd, equals 2*radius+1
    std::vector<double> weights;   // row-major, size*size entries

    int radius() const { return (size - 1) / 2; }
    double at(int row, int col) const {
        return weights[static_cast<std::size_t>(row) * size + col];
    }
    /// Weight at grid offset (dx, dy) from the center, each in [-radius, radius].
    double at_offset(int dx, int dy) const {
        return at(dy + radius(), dx + radius());
    }
};

/// Isotropic Gaussian density at distance r from the origin in `dims`
/// dimensions: (2*pi*sigma^2)^(-dims/2) * exp(-r^2 / (2*sigma^2)).
double gaussian_density_nd(double r, double sigma, int dims);

/// Two-dimensional Gaussian density at offset (u, v).
double gaussian_density_2d(double u, double v, double sigma);

/// 1-D Gaussian weights at integer offsets -radius..radius, normalized to
/// sum to 1. The 2-D kernel is their outer product up to normalization.
std::vector<double> gaussian_weights_1d(double sigma, int radius);

/// Samples gaussian_density_2d at every integer offset of the grid and
/// normalizes so the weights sum to 1.
KernelMatrix build_kernel(const GaussianKernelSpec& spec);

/// Direct 2-D convolution with mirror-reflected borders. Each channel is
/// processed independently; the weighted sum is taken in real arithmetic,
/// rounded half-up and clamped to [0, 255].
/// Requires kernel size <= 2*min(width, height) + 1.
ImagePlane blur_plane(const ImagePlane& img, const KernelMatrix& kernel);

/// Separable two-pass variant. Rounding happens once, after the second pass,
/// so the result matches blur_plane(img, build_kernel(spec)) after rounding.
ImagePlane blur_plane_separable(const ImagePlane& img, const GaussianKernelSpec& spec);

}  // namespace detkit
