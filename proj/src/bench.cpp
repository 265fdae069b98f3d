#include "wect/bench.hpp"

#include "wect/engine.hpp"
#include "wect/oracle.hpp"

#include <ostream>
#include <random>

namespace wect {

GrayscaleImage random_image(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> level(0, 255);
    std::vector<double> pixels(rows * cols);
    for (double& v : pixels) v = level(rng) / 255.0;
    return GrayscaleImage(rows, cols, std::move(pixels));
}

std::vector<BenchRow> bench(const BenchConfig& config) {
    std::vector<BenchRow> rows;
    for (std::size_t side : config.sizes) {
        if (side == 0) throw Error(ErrorKind::Input, "benchmark sizes must be positive");
        const GrayscaleImage img = random_image(side, side, config.seed + side);
        const WeightedComplex c = config.complex_type == ComplexType::Cubical
                                      ? cubical_from_image(img)
                                      : freudenthal_from_image(img);
        const DirectionSet dirs = directions(2, config.directions, config.seed);
        const FilterSet fs = height_filters(c, dirs);
        const DiscretizationGrid grid = make_grid(fs, config.heights);
        EngineOptions options;
        options.threads = config.threads;

        auto run_naive = [&] {
            volatile double sink = oracle::naive_wect(c, dirs, grid).values[0];
            (void)sink;
        };
        auto run_engine = [&] {
            volatile double sink = compute_wect(c, dirs, grid, options).values[0];
            (void)sink;
        };

        BenchRow row;
        row.side = side;
        row.cells = c.total_cells();
        row.engine_seconds = config.engine == EngineKind::Naive
                                 ? median_seconds(run_naive, config.repeats)
                                 : median_seconds(run_engine, config.repeats);
        if (config.baseline_max_side == 0 || side <= config.baseline_max_side) {
            row.baseline_seconds = median_seconds(run_naive, config.repeats);
        }
        rows.push_back(row);
    }
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "side,cells,engine_seconds,naive_seconds,speedup\n";
    for (const BenchRow& r : rows) {
        out << r.side << ',' << r.cells << ',' << format_double(r.engine_seconds) << ',';
        if (r.baseline_seconds) out << format_double(*r.baseline_seconds);
        out << ',';
        if (auto s = r.speedup()) out << format_double(*s);
        out << '\n';
    }
}

}  // namespace wect
