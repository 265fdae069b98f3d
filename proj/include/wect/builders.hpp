#pragma once

#include "wect/complex.hpp"
#include "wect/wecf_types.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace wect {

/// Row-major grayscale intensities in [0, 1].
class GrayscaleImage {
public:
    GrayscaleImage(std::size_t rows, std::size_t cols, std::vector<double> intensities);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::size_t pixel_count() const noexcept { return pixels_.size(); }
    [[nodiscard]] double operator()(std::size_t r, std::size_t c) const noexcept {
        return pixels_[r * cols_ + c];
    }
    [[nodiscard]] const std::vector<double>& intensities() const noexcept { return pixels_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> pixels_;
};

// Both image builders make one vertex per pixel, vertex a = r * cols + c,
// weighted by its intensity; every other cell takes the max weight of its
// vertices. Column c maps to axis 0 and row r to axis 1 (downward), then
// coordinates are centered on the image centroid and scaled by
// 1 / max(rows - 1, cols - 1, 1) so they lie in [-0.5, 0.5]^2.
//
// With a threshold, pixels darker than it are removed together with every
// cell that touches them; surviving vertices keep their relative order.

/// Triangulated grid: horizontal, vertical and (r,c)-(r+1,c+1) diagonal
/// edges; two triangles per unit square.
WeightedComplex freudenthal_from_image(const GrayscaleImage& img,
                                       std::optional<double> threshold = std::nullopt);

/// Cubical grid: axis-aligned edges and unit squares stored by 4 vertices.
WeightedComplex cubical_from_image(const GrayscaleImage& img,
                                   std::optional<double> threshold = std::nullopt);

/// Single filter equal to the pixel intensities. `c` must carry one vertex
/// per pixel in builder order.
FilterSet intensity_filter(const GrayscaleImage& img, const WeightedComplex& c);

/// n = 2: d evenly spaced angles starting at (1, 0).
/// n >= 3: d seeded standard-normal samples normalized to unit length.
DirectionSet directions(std::size_t n, std::size_t d, std::uint64_t seed = 0);

}  // namespace wect
