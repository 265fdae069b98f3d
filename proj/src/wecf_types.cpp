#include "wect/wecf_types.hpp"

#include <algorithm>
#include <cmath>

namespace wect {

DiscretizationGrid::DiscretizationGrid(double max_height, std::int64_t numvals)
    : max_height_(max_height), numvals_(numvals) {
    if (numvals < 2) {
        throw Error(ErrorKind::Input,
                    "numvals must be at least 2, got " + std::to_string(numvals));
    }
    if (!(max_height >= 0.0) || !std::isfinite(max_height)) {
        throw Error(ErrorKind::Input, "max height must be finite and non-negative");
    }
}

double DiscretizationGrid::beta_unchecked(std::int64_t q) const noexcept {
    if (degenerate()) return 0.0;
    if (q == 0) return -max_height_;
    if (q == numvals_ - 1) return max_height_;
    return static_cast<double>(q) * (2.0 * max_height_) / static_cast<double>(numvals_ - 1) -
           max_height_;
}

double DiscretizationGrid::beta(std::int64_t q) const {
    if (q < 0 || q >= numvals_) {
        throw Error(ErrorKind::Range, "grid index " + std::to_string(q) + " outside [0, " +
                                          std::to_string(numvals_) + ")");
    }
    return beta_unchecked(q);
}

std::int64_t DiscretizationGrid::alpha(double t) const {
    if (std::isnan(t) || std::abs(t) > max_height_ + kClampTolerance) {
        throw Error(ErrorKind::Range, "height " + std::to_string(t) + " outside [-" +
                                          std::to_string(max_height_) + ", " +
                                          std::to_string(max_height_) + "]");
    }
    if (degenerate()) return 0;
    t = std::clamp(t, -max_height_, max_height_);

    const double last = static_cast<double>(numvals_ - 1);
    const double scaled = last * (max_height_ + t) / (2.0 * max_height_);
    auto q = static_cast<std::int64_t>(std::ceil(scaled));
    q = std::clamp<std::int64_t>(q, 0, numvals_ - 1);

    // The ceiling can be off by one when `scaled` lands within rounding error
    // of an integer; settle on the least q with t <= beta(q).
    while (q > 0 && t <= beta_unchecked(q - 1)) --q;
    while (q < numvals_ - 1 && t > beta_unchecked(q)) ++q;
    return q;
}

std::vector<double> DiscretizationGrid::heights() const {
    std::vector<double> out(static_cast<std::size_t>(numvals_));
    for (std::int64_t q = 0; q < numvals_; ++q) out[static_cast<std::size_t>(q)] = beta_unchecked(q);
    return out;
}

double max_abs_filter_value(const FilterSet& fs) {
    double m = 0.0;
    for (double v : fs.fvals.data()) {
        if (!std::isfinite(v)) throw Error(ErrorKind::Input, "non-finite filter value");
        m = std::max(m, std::abs(v));
    }
    return m;
}

}  // namespace wect
