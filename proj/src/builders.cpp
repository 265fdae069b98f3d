#include "wect/builders.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace wect {

GrayscaleImage::GrayscaleImage(std::size_t rows, std::size_t cols, std::vector<double> intensities)
    : rows_(rows), cols_(cols), pixels_(std::move(intensities)) {
    if (rows == 0 || cols == 0) {
        throw Error(ErrorKind::Input, "image must have at least one row and one column");
    }
    if (pixels_.size() != rows * cols) {
        throw Error(ErrorKind::Input, "image has " + std::to_string(pixels_.size()) +
                                          " intensities for " + std::to_string(rows) + "x" +
                                          std::to_string(cols) + " pixels");
    }
    for (std::size_t i = 0; i < pixels_.size(); ++i) {
        if (!(pixels_[i] >= 0.0 && pixels_[i] <= 1.0)) {
            throw Error(ErrorKind::Input, "intensity at pixel " + std::to_string(i) +
                                              " outside [0, 1]");
        }
    }
}

namespace {

enum class GridKind { Freudenthal, Cubical };

struct CellList {
    std::size_t width = 0;
    std::vector<std::int64_t> vertices;
    std::vector<double> weights;
};

WeightedComplex build_grid(const GrayscaleImage& img, std::optional<double> threshold,
                           GridKind kind) {
    const std::size_t rows = img.rows();
    const std::size_t cols = img.cols();
    const std::size_t k0 = rows * cols;
    const auto& w = img.intensities();

    // Surviving vertices and their compact indices; -1 marks a dropped pixel.
    std::vector<std::int64_t> remap(k0);
    std::size_t kept = 0;
    for (std::size_t a = 0; a < k0; ++a) {
        const bool keep = !threshold || w[a] >= *threshold;
        remap[a] = keep ? static_cast<std::int64_t>(kept++) : -1;
    }

    const double scale = 1.0 / static_cast<double>(std::max<std::size_t>({rows - 1, cols - 1, 1}));
    const double cx = (static_cast<double>(cols) - 1.0) / 2.0;
    const double cy = (static_cast<double>(rows) - 1.0) / 2.0;
    std::vector<double> coords;
    std::vector<double> vweights;
    coords.reserve(2 * kept);
    vweights.reserve(kept);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (remap[r * cols + c] < 0) continue;
            coords.push_back((static_cast<double>(c) - cx) * scale);
            coords.push_back((static_cast<double>(r) - cy) * scale);
            vweights.push_back(w[r * cols + c]);
        }
    }

    CellList edges{2, {}, {}};
    CellList tops{kind == GridKind::Freudenthal ? 3u : 4u, {}, {}};
    const std::size_t squares = (rows - 1) * (cols - 1);
    edges.vertices.reserve(2 * (3 * k0));
    tops.vertices.reserve(tops.width * 2 * squares);

    // `verts` must be ascending pixel indices.
    auto emit = [&](CellList& list, std::initializer_list<std::size_t> verts) {
        double weight = 0.0;
        for (std::size_t a : verts) {
            if (remap[a] < 0) return;
            weight = std::max(weight, w[a]);
        }
        for (std::size_t a : verts) list.vertices.push_back(remap[a]);
        list.weights.push_back(weight);
    };

    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const std::size_t a = r * cols + c;
            const bool right = c + 1 < cols;
            const bool down = r + 1 < rows;
            if (right) emit(edges, {a, a + 1});
            if (down) emit(edges, {a, a + cols});
            if (right && down && kind == GridKind::Freudenthal) emit(edges, {a, a + cols + 1});
        }
    }
    for (std::size_t r = 0; r + 1 < rows; ++r) {
        for (std::size_t c = 0; c + 1 < cols; ++c) {
            const std::size_t a = r * cols + c;
            if (kind == GridKind::Freudenthal) {
                emit(tops, {a, a + 1, a + cols + 1});
                emit(tops, {a, a + cols, a + cols + 1});
            } else {
                emit(tops, {a, a + 1, a + cols, a + cols + 1});
            }
        }
    }

    auto to_block = [](CellList& list) {
        const std::size_t k = list.weights.size();
        return CellBlock{IndexTensor({k, list.width}, std::move(list.vertices)),
                         Tensor({k}, std::move(list.weights))};
    };
    std::vector<CellBlock> blocks;
    blocks.push_back(to_block(edges));
    blocks.push_back(to_block(tops));
    return WeightedComplex(Tensor({kept}, std::move(vweights)), std::move(blocks),
                           Tensor({kept, 2}, std::move(coords)));
}

}  // namespace

WeightedComplex freudenthal_from_image(const GrayscaleImage& img, std::optional<double> threshold) {
    return build_grid(img, threshold, GridKind::Freudenthal);
}

WeightedComplex cubical_from_image(const GrayscaleImage& img, std::optional<double> threshold) {
    return build_grid(img, threshold, GridKind::Cubical);
}

FilterSet intensity_filter(const GrayscaleImage& img, const WeightedComplex& c) {
    if (c.vertex_count() != img.pixel_count()) {
        throw Error(ErrorKind::Input, "complex has " + std::to_string(c.vertex_count()) +
                                          " vertices but the image has " +
                                          std::to_string(img.pixel_count()) + " pixels");
    }
    return {Tensor({img.pixel_count(), 1}, img.intensities())};
}

DirectionSet directions(std::size_t n, std::size_t d, std::uint64_t seed) {
    if (n < 2) {
        throw Error(ErrorKind::Input, "directions need ambient dimension >= 2, got " +
                                          std::to_string(n));
    }
    if (d < 1) throw Error(ErrorKind::Input, "direction count must be positive");
    Tensor out({d, n});
    if (n == 2) {
        for (std::size_t p = 0; p < d; ++p) {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(p) /
                                 static_cast<double>(d);
            out(p, 0) = std::cos(theta);
            out(p, 1) = std::sin(theta);
        }
        return {std::move(out)};
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (std::size_t p = 0; p < d; ++p) {
        double norm = 0.0;
        while (norm < 1e-8) {
            norm = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                out(p, j) = normal(rng);
                norm += out(p, j) * out(p, j);
            }
            norm = std::sqrt(norm);
        }
        for (std::size_t j = 0; j < n; ++j) out(p, j) /= norm;
    }
    return {std::move(out)};
}

}  // namespace wect
