#pragma once

#include "wect/builders.hpp"
#include "wect/wecf_types.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wect {

enum class ImageKind { Pgm, CsvGrid };

/// P2 or P5 grayscale with maxval <= 255, normalized by maxval.
GrayscaleImage parse_pgm(std::string_view bytes);

/// Comma-separated rows of numbers. Grids whose values all lie in [0, 1] are
/// taken as already normalized; otherwise values must lie in [0, 255].
GrayscaleImage parse_csv_grid(std::string_view text);

GrayscaleImage load_image(const std::string& path, ImageKind kind);

/// Whitespace- or comma-separated numeric matrix, one row per line, '#'
/// comments. Used for filter files and direction files.
Tensor parse_matrix(std::string_view text);
Tensor load_matrix(const std::string& path);

/// (k0 x m) filter values from a matrix file.
FilterSet load_filters(const std::string& path);

/// Direction rows from a matrix file, each scaled to unit length.
DirectionSet load_directions(const std::string& path);

enum class ResultFormat { Csv, Raw64 };

/// csv:   "height,beta(0),...,beta(numvals-1)", then one row per filter whose
///        label is the direction components joined by ';' (or the filter
///        index when `dirs` is absent). 17 significant digits throughout.
/// raw64: u64 m, u64 numvals (little-endian), m*numvals binary64 values
///        row-major, then m*n binary64 direction components when `dirs` is set.
void write_result(std::ostream& out, const WecfMatrix& w, const DirectionSet* dirs,
                  ResultFormat format);
void write_result(const std::string& path, const WecfMatrix& w, const DirectionSet* dirs,
                  ResultFormat format);

struct ResultFile {
    Tensor values;
    std::vector<double> heights;          // csv only
    std::vector<std::string> labels;      // csv only
    std::optional<Tensor> directions;     // raw64 with trailing directions
};

ResultFile read_result_csv(std::istream& in);
ResultFile read_result_raw64(std::istream& in);

std::string read_file(const std::string& path);

}  // namespace wect
