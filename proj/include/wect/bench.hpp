#pragma once

#include "wect/run.hpp"

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace wect {

/// Median wall time of `repeats` calls (monotonic clock) after one discarded
/// warm-up call.
template <class F>
double median_seconds(F&& fn, std::size_t repeats) {
    using clock = std::chrono::steady_clock;
    fn();
    std::vector<double> samples;
    samples.reserve(repeats);
    for (std::size_t r = 0; r < std::max<std::size_t>(1, repeats); ++r) {
        const auto start = clock::now();
        fn();
        samples.push_back(std::chrono::duration<double>(clock::now() - start).count());
    }
    std::sort(samples.begin(), samples.end());
    const std::size_t n = samples.size();
    return n % 2 == 1 ? samples[n / 2] : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
}

/// 8-bit style random image: intensities k / 255 with k uniform in [0, 255].
GrayscaleImage random_image(std::size_t rows, std::size_t cols, std::uint64_t seed);

struct BenchConfig {
    std::vector<std::size_t> sizes;  // square image side lengths
    std::size_t directions = 25;
    std::int64_t heights = 256;
    std::size_t repeats = 3;
    std::uint64_t seed = 0;
    EngineKind engine = EngineKind::Vectorized;
    ComplexType complex_type = ComplexType::Freudenthal;
    /// The naive baseline is skipped above this side length (0: never skip).
    std::size_t baseline_max_side = 0;
    unsigned threads = 0;
};

struct BenchRow {
    std::size_t side = 0;
    std::size_t cells = 0;
    double engine_seconds = 0.0;
    std::optional<double> baseline_seconds;

    [[nodiscard]] std::optional<double> speedup() const {
        if (!baseline_seconds || engine_seconds <= 0.0) return std::nullopt;
        return *baseline_seconds / engine_seconds;
    }
};

/// Times the selected engine against the naive oracle on a random image per
/// size, computing the WECT over evenly spaced directions.
std::vector<BenchRow> bench(const BenchConfig& config);

/// "side,cells,engine_seconds,naive_seconds,speedup"; skipped baselines are
/// left empty.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace wect
