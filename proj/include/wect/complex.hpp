#pragma once

#include "wect/tensor.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wect {

/// All cells of one dimension i >= 1: a (k_i x w) vertex-index table and k_i
/// weights. Simplices have w = i + 1, cubes w = 2^i.
struct CellBlock {
    IndexTensor vertices;
    Tensor weights;
};

/// A weighted simplicial or cubical complex laid out the way the vectorized
/// engine consumes it. Immutable once constructed.
///
/// Vertex rows of every cell are sorted ascending on construction. Trailing
/// empty dimensions are dropped, so `dimension()` is the largest i with k_i > 0.
/// Index bounds and face closure are not enforced here; see `validate`.
class WeightedComplex {
public:
    WeightedComplex() = default;

    /// `cells[0]` holds dimension 1, `cells[1]` dimension 2 and so on.
    /// `coordinates`, when present, is (k0 x n).
    WeightedComplex(Tensor vertex_weights, std::vector<CellBlock> cells,
                    std::optional<Tensor> coordinates = std::nullopt);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return vertex_weights_.size(); }
    [[nodiscard]] std::size_t dimension() const noexcept { return blocks_.size(); }

    /// Number of cells of dimension `dim`; zero beyond `dimension()`.
    [[nodiscard]] std::size_t cell_count(std::size_t dim) const noexcept;
    [[nodiscard]] std::size_t total_cells() const noexcept;

    /// Cells of dimension `dim` (1 <= dim <= dimension()).
    [[nodiscard]] const CellBlock& cells(std::size_t dim) const;
    [[nodiscard]] const std::vector<CellBlock>& blocks() const noexcept { return blocks_; }

    [[nodiscard]] const Tensor& vertex_weights() const noexcept { return vertex_weights_; }
    [[nodiscard]] const std::optional<Tensor>& coordinates() const noexcept { return coords_; }
    [[nodiscard]] bool has_coordinates() const noexcept { return coords_.has_value(); }
    /// Ambient dimension n, or 0 for an abstract complex.
    [[nodiscard]] std::size_t ambient_dimension() const noexcept;

    /// Same cells and coordinates, new weights. Each weight tensor must match
    /// the cell count of its dimension.
    [[nodiscard]] WeightedComplex with_weights(Tensor vertex_weights,
                                               std::vector<Tensor> cell_weights) const;

private:
    Tensor vertex_weights_{Shape{0}};
    std::vector<CellBlock> blocks_;
    std::optional<Tensor> coords_;
};

struct EulerSummary {
    double chi = 0.0;
};

/// Alternating sum of cell weights over the whole complex.
EulerSummary weighted_euler_characteristic(const WeightedComplex& c);

/// Every weight replaced by 1; turns a WECF into the classic ECF.
WeightedComplex unit_weights(const WeightedComplex& c);

enum class ViolationRule {
    IndexOutOfRange,
    RepeatedVertex,
    CellWidth,
    MissingFace,
};

struct Violation {
    std::size_t dim = 0;
    std::size_t cell = 0;
    ViolationRule rule = ViolationRule::IndexOutOfRange;
    std::string detail;
};

std::string to_string(const Violation& v);

/// Checks index bounds, distinct vertices per cell, cell widths and face
/// closure. Returns an empty list for a well-formed complex.
std::vector<Violation> validate(const WeightedComplex& c);

// Text interchange format:
//   header:  D n k0 k1 ... kD
//   k0 lines of n coordinates followed by the vertex weight
//   then, for i = 1..D, k_i lines of vertex indices followed by the weight.
// '#' starts a comment running to end of line. n = 0 means no coordinates.

WeightedComplex read_complex_text(std::istream& in);
void write_complex_text(std::ostream& out, const WeightedComplex& c);

WeightedComplex load_complex(const std::string& path);
void save_complex(const std::string& path, const WeightedComplex& c);

/// binary64 -> shortest-safe decimal with 17 significant digits.
std::string format_double(double value);

}  // namespace wect
