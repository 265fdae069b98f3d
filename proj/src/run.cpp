#include "wect/run.hpp"

#include "wect/engine.hpp"
#include "wect/oracle.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace wect {

int exit_status(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Input: return 3;
        case ErrorKind::Parse: return 4;
        case ErrorKind::Io: return 5;
        case ErrorKind::InvalidShape:
        case ErrorKind::Shape:
        case ErrorKind::Axis:
        case ErrorKind::Index:
        case ErrorKind::Range: return 6;
    }
    return 1;
}

namespace {

WeightedComplex build_from_image(const GrayscaleImage& img, const RunConfig& config) {
    switch (config.complex_type) {
        case ComplexType::Freudenthal: return freudenthal_from_image(img, config.threshold);
        case ComplexType::Cubical: return cubical_from_image(img, config.threshold);
        case ComplexType::AsGiven: break;
    }
    throw Error(ErrorKind::Input, "complex type 'as-given' needs a complex-text input");
}

WeightedComplex load_input_complex(const RunConfig& config, std::optional<GrayscaleImage>& image) {
    if (config.input.empty()) throw Error(ErrorKind::Input, "no input file given");
    if (config.input_kind == InputKind::ComplexText) {
        return load_complex(config.input);
    }
    image = load_image(config.input,
                       config.input_kind == InputKind::Pgm ? ImageKind::Pgm : ImageKind::CsvGrid);
    return build_from_image(*image, config);
}

WecfMatrix evaluate(const WeightedComplex& c, const FilterSet& fs, const RunConfig& config) {
    const EngineOptions options{config.threads, EngineOptions{}.chunk_cells, config.max_height};
    const DiscretizationGrid grid = make_grid(fs, config.heights, config.max_height);
    if (config.engine == EngineKind::Naive) return oracle::naive_wecfs(c, fs, grid);
    return compute_wecfs(c, fs, grid, options);
}

}  // namespace

RunResult compute(const RunConfig& config) {
    std::optional<GrayscaleImage> image;
    WeightedComplex complex = load_input_complex(config, image);
    if (!config.emit_complex.empty()) save_complex(config.emit_complex, complex);

    switch (config.mode) {
        case Mode::Ecf: {
            // Pixel intensities filter the unit-weighted complex. For complex
            // files and thresholded images the vertex weights carry them.
            FilterSet fs = (image && !config.threshold)
                               ? intensity_filter(*image, complex)
                               : FilterSet{Tensor({complex.vertex_count(), 1},
                                                  std::vector<double>(
                                                      complex.vertex_weights().data().begin(),
                                                      complex.vertex_weights().data().end()))};
            return {evaluate(unit_weights(complex), fs, config), std::nullopt};
        }
        case Mode::Wect: {
            if (!complex.has_coordinates()) {
                throw Error(ErrorKind::Input, "wect mode needs vertex coordinates");
            }
            DirectionSet dirs = config.directions_file.empty()
                                    ? directions(complex.ambient_dimension(), config.directions,
                                                 config.seed)
                                    : load_directions(config.directions_file);
            if (config.engine == EngineKind::Naive) {
                const FilterSet heights = height_filters(complex, dirs);
                const DiscretizationGrid grid =
                    make_grid(heights, config.heights, config.max_height);
                return {oracle::naive_wect(complex, dirs, grid), std::move(dirs)};
            }
            return {evaluate(complex, height_filters(complex, dirs), config), std::move(dirs)};
        }
        case Mode::Wecf: {
            if (config.filters.empty()) {
                throw Error(ErrorKind::Input, "wecf mode needs a filter file (--filters)");
            }
            return {evaluate(complex, load_filters(config.filters), config), std::nullopt};
        }
    }
    throw Error(ErrorKind::Input, "unknown mode");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const RunResult result = compute(config);
        const DirectionSet* dirs = result.directions ? &*result.directions : nullptr;
        if (config.output.empty() || config.output == "-") {
            write_result(out, result.matrix, dirs, config.format);
        } else {
            // Render fully before touching the output path.
            std::ostringstream buffer;
            write_result(buffer, result.matrix, dirs, config.format);
            std::ofstream file(config.output, std::ios::binary);
            if (!file) throw Error(ErrorKind::Io, "cannot open '" + config.output + "' for writing");
            file << buffer.str();
            if (!file) throw Error(ErrorKind::Io, "write failed for '" + config.output + "'");
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_status(e.kind());
    } catch (const std::bad_alloc&) {
        err << "error: resource: out of memory\n";
        return 7;
    }
}

}  // namespace wect
