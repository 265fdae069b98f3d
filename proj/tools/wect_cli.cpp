// Command-line front end: WECT / ECF / WECF computation and the benchmark.

#include "wect/bench.hpp"
#include "wect/run.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{
        "Vectorized weighted Euler characteristic functions and transforms.\n"
        "Image columns map to axis 0 (rightward) and rows to axis 1 (downward);\n"
        "pixel coordinates are centered and scaled into [-0.5, 0.5]^2."};

    wect::RunConfig config;
    std::vector<std::size_t> bench_sizes;
    std::size_t repeats = 3;
    double threshold = 0.0;
    double max_height = 0.0;

    const std::map<std::string, wect::Mode> modes{
        {"wect", wect::Mode::Wect}, {"ecf", wect::Mode::Ecf}, {"wecf", wect::Mode::Wecf}};
    const std::map<std::string, wect::InputKind> kinds{{"pgm", wect::InputKind::Pgm},
                                                       {"csv-grid", wect::InputKind::CsvGrid},
                                                       {"complex-text", wect::InputKind::ComplexText}};
    const std::map<std::string, wect::ComplexType> types{
        {"freudenthal", wect::ComplexType::Freudenthal},
        {"cubical", wect::ComplexType::Cubical},
        {"as-given", wect::ComplexType::AsGiven}};
    const std::map<std::string, wect::EngineKind> engines{
        {"vectorized", wect::EngineKind::Vectorized}, {"naive", wect::EngineKind::Naive}};
    const std::map<std::string, wect::ResultFormat> formats{{"csv", wect::ResultFormat::Csv},
                                                           {"raw64", wect::ResultFormat::Raw64}};

    app.add_option("--mode", config.mode, "wect | ecf | wecf")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    app.add_option("--input", config.input, "Input image or complex file");
    app.add_option("--input-kind", config.input_kind, "pgm | csv-grid | complex-text")
        ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
    app.add_option("--complex-type", config.complex_type, "freudenthal | cubical | as-given")
        ->transform(CLI::CheckedTransformer(types, CLI::ignore_case));
    app.add_option("--directions", config.directions, "Number of directions (wect)")
        ->check(CLI::PositiveNumber);
    app.add_option("--directions-file", config.directions_file,
                   "Matrix file of direction rows, used instead of generated directions");
    app.add_option("--heights", config.heights, "Number of grid heights (>= 2)")
        ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40));
    app.add_option("--seed", config.seed, "Seed for random directions in dimension >= 3");
    auto* threshold_opt =
        app.add_option("--threshold", threshold, "Drop pixels with intensity below this value");
    app.add_option("--engine", config.engine, "vectorized | naive")
        ->transform(CLI::CheckedTransformer(engines, CLI::ignore_case));
    app.add_option("--output", config.output, "Output path (default: stdout)");
    app.add_option("--format", config.format, "csv | raw64")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    auto* max_height_opt =
        app.add_option("--max-height", max_height, "Shared grid half-width override")
            ->check(CLI::NonNegativeNumber);
    app.add_option("--filters", config.filters, "Matrix file of vertex filters (wecf)");
    app.add_option("--emit-complex", config.emit_complex,
                   "Also write the built complex in text format");
    app.add_option("--bench-sizes", bench_sizes, "Run the benchmark on these square image sides")
        ->delimiter(',');
    app.add_option("--repeats", repeats, "Timed repeats per benchmark size")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: usage: " << e.what() << '\n';
        return wect::kExitUsage;
    }
    if (threshold_opt->count() > 0) config.threshold = threshold;
    if (max_height_opt->count() > 0) config.max_height = max_height;

    if (!bench_sizes.empty()) {
        wect::BenchConfig bc;
        bc.sizes = bench_sizes;
        bc.directions = config.directions;
        bc.heights = config.heights;
        bc.repeats = repeats;
        bc.seed = config.seed;
        bc.engine = config.engine;
        bc.complex_type = config.complex_type == wect::ComplexType::Cubical
                              ? wect::ComplexType::Cubical
                              : wect::ComplexType::Freudenthal;
        try {
            wect::write_bench_csv(std::cout, wect::bench(bc));
        } catch (const wect::Error& e) {
            std::cerr << "error: " << wect::to_string(e.kind()) << ": " << e.what() << '\n';
            return wect::exit_status(e.kind());
        }
        return 0;
    }

    return wect::run(config, std::cout, std::cerr);
}
