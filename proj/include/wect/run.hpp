#pragma once

#include "wect/io.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wect {

enum class Mode { Wect, Ecf, Wecf };
enum class InputKind { Pgm, CsvGrid, ComplexText };
enum class ComplexType { Freudenthal, Cubical, AsGiven };
enum class EngineKind { Vectorized, Naive };

/// One CLI invocation.
///
/// ecf:  image -> complex, unit weights, intensity filter.
/// wect: image -> complex weighted by intensity (or a complex file with
///       coordinates), directions generated or read from a file.
/// wecf: complex file plus a (k0 x m) filter file.
struct RunConfig {
    Mode mode = Mode::Wect;
    std::string input;
    InputKind input_kind = InputKind::Pgm;
    ComplexType complex_type = ComplexType::Freudenthal;
    std::size_t directions = 32;
    std::int64_t heights = 64;
    std::uint64_t seed = 0;
    std::optional<double> threshold;
    EngineKind engine = EngineKind::Vectorized;
    std::string output;  // empty: stdout
    ResultFormat format = ResultFormat::Csv;
    std::optional<double> max_height;
    std::string filters;          // wecf mode
    std::string directions_file;  // wect mode, overrides `directions`
    std::string emit_complex;     // optional copy of the built complex
    unsigned threads = 0;
};

/// Process exit status for each error category.
int exit_status(ErrorKind kind) noexcept;

inline constexpr int kExitUsage = 2;

/// Runs the pipeline. Errors are reported on `err` as a single line
/// "error: <category>: <message>" and mapped through `exit_status`; nothing is
/// written to `config.output` unless the computation succeeded.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Computes the result without writing it. Throws wect::Error.
struct RunResult {
    WecfMatrix matrix;
    std::optional<DirectionSet> directions;
};
RunResult compute(const RunConfig& config);

}  // namespace wect
