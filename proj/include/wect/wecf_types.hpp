#pragma once

#include "wect/tensor.hpp"

#include <cstdint>
#include <vector>

namespace wect {

/// Vertex filter values, (k0 x m): fvals(a, p) is filter p at vertex a.
struct FilterSet {
    Tensor fvals{Shape{0, 0}};

    [[nodiscard]] std::size_t vertex_count() const { return fvals.extent(0); }
    [[nodiscard]] std::size_t filter_count() const { return fvals.extent(1); }
};

/// Unit direction vectors, one per row: (d x n).
struct DirectionSet {
    Tensor directions{Shape{0, 0}};

    [[nodiscard]] std::size_t count() const { return directions.extent(0); }
    [[nodiscard]] std::size_t ambient_dimension() const { return directions.extent(1); }
};

/// Evenly spaced heights over [-max_height, max_height] and the index map
/// that sends a height to the first grid point at or above it.
///
/// `alpha` and `beta` form a Galois connection, alpha(t) <= q iff
/// t <= beta(q), which holds exactly for the binary64 values `beta` returns.
/// A zero max_height collapses the grid: every height maps to index 0 and
/// every grid point is 0.
class DiscretizationGrid {
public:
    /// Heights outside [-max_height, max_height] by at most this much are
    /// clamped; anything further is a range error.
    static constexpr double kClampTolerance = 1e-9;

    DiscretizationGrid(double max_height, std::int64_t numvals);

    [[nodiscard]] double max_height() const noexcept { return max_height_; }
    [[nodiscard]] std::int64_t numvals() const noexcept { return numvals_; }
    [[nodiscard]] bool degenerate() const noexcept { return max_height_ == 0.0; }

    [[nodiscard]] std::int64_t alpha(double t) const;
    [[nodiscard]] double beta(std::int64_t q) const;

    /// beta(0), ..., beta(numvals - 1).
    [[nodiscard]] std::vector<double> heights() const;

    friend bool operator==(const DiscretizationGrid&, const DiscretizationGrid&) = default;

private:
    [[nodiscard]] double beta_unchecked(std::int64_t q) const noexcept;

    double max_height_;
    std::int64_t numvals_;
};

/// Largest |fvals| entry; 0 for an empty filter set.
double max_abs_filter_value(const FilterSet& fs);

/// (m x numvals) sampled WECFs: values(p, q) = wecf_p(grid.beta(q)).
struct WecfMatrix {
    Tensor values;
    DiscretizationGrid grid;

    [[nodiscard]] std::size_t rows() const { return values.extent(0); }
};

}  // namespace wect
