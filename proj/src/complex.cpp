#include "wect/complex.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <set>

namespace wect {

WeightedComplex::WeightedComplex(Tensor vertex_weights, std::vector<CellBlock> cells,
                                 std::optional<Tensor> coordinates)
    : vertex_weights_(std::move(vertex_weights)),
      blocks_(std::move(cells)),
      coords_(std::move(coordinates)) {
    if (vertex_weights_.rank() != 1) {
        throw Error(ErrorKind::Input, "vertex weights must be 1-D, got " +
                                          shape_string(vertex_weights_.shape()));
    }
    const std::size_t k0 = vertex_weights_.size();
    if (coords_) {
        if (coords_->rank() != 2 || coords_->extent(0) != k0) {
            throw Error(ErrorKind::Input, "vertex coordinates have shape " +
                                              shape_string(coords_->shape()) + " but there are " +
                                              std::to_string(k0) + " vertices");
        }
    }
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        CellBlock& block = blocks_[b];
        const std::size_t dim = b + 1;
        if (block.vertices.rank() != 2 || block.weights.rank() != 1 ||
            block.vertices.extent(0) != block.weights.size()) {
            throw Error(ErrorKind::Input,
                        "dimension " + std::to_string(dim) + " cells: vertex table " +
                            shape_string(block.vertices.shape()) + " and weights " +
                            shape_string(block.weights.shape()) + " disagree");
        }
        if (block.vertices.extent(1) == 0) {
            throw Error(ErrorKind::Input,
                        "dimension " + std::to_string(dim) + " cells have no vertices");
        }
        for (std::size_t r = 0; r < block.vertices.extent(0); ++r) {
            auto row = block.vertices.row(r);
            std::sort(row.begin(), row.end());
        }
    }
    while (!blocks_.empty() && blocks_.back().weights.size() == 0) {
        blocks_.pop_back();
    }
}

std::size_t WeightedComplex::cell_count(std::size_t dim) const noexcept {
    if (dim == 0) return vertex_count();
    if (dim > blocks_.size()) return 0;
    return blocks_[dim - 1].weights.size();
}

std::size_t WeightedComplex::total_cells() const noexcept {
    std::size_t total = vertex_count();
    for (const auto& block : blocks_) total += block.weights.size();
    return total;
}

const CellBlock& WeightedComplex::cells(std::size_t dim) const {
    if (dim == 0 || dim > blocks_.size()) {
        throw Error(ErrorKind::Input, "no cell block for dimension " + std::to_string(dim));
    }
    return blocks_[dim - 1];
}

std::size_t WeightedComplex::ambient_dimension() const noexcept {
    return coords_ ? coords_->extent(1) : 0;
}

WeightedComplex WeightedComplex::with_weights(Tensor vertex_weights,
                                              std::vector<Tensor> cell_weights) const {
    if (cell_weights.size() != blocks_.size()) {
        throw Error(ErrorKind::Input, "expected weights for " + std::to_string(blocks_.size()) +
                                          " cell dimensions, got " +
                                          std::to_string(cell_weights.size()));
    }
    std::vector<CellBlock> blocks;
    blocks.reserve(blocks_.size());
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        blocks.push_back({blocks_[b].vertices, std::move(cell_weights[b])});
    }
    return WeightedComplex(std::move(vertex_weights), std::move(blocks), coords_);
}

EulerSummary weighted_euler_characteristic(const WeightedComplex& c) {
    double chi = 0.0;
    for (double w : c.vertex_weights().data()) chi += w;
    for (std::size_t dim = 1; dim <= c.dimension(); ++dim) {
        double sum = 0.0;
        for (double w : c.cells(dim).weights.data()) sum += w;
        chi += (dim % 2 == 0) ? sum : -sum;
    }
    return {chi};
}

WeightedComplex unit_weights(const WeightedComplex& c) {
    auto ones = [](std::size_t n) { return Tensor({n}, std::vector<double>(n, 1.0)); };
    std::vector<Tensor> cell_weights;
    for (std::size_t dim = 1; dim <= c.dimension(); ++dim) {
        cell_weights.push_back(ones(c.cell_count(dim)));
    }
    return c.with_weights(ones(c.vertex_count()), std::move(cell_weights));
}

std::string to_string(const Violation& v) {
    std::string rule;
    switch (v.rule) {
        case ViolationRule::IndexOutOfRange: rule = "index-out-of-range"; break;
        case ViolationRule::RepeatedVertex: rule = "repeated-vertex"; break;
        case ViolationRule::CellWidth: rule = "cell-width"; break;
        case ViolationRule::MissingFace: rule = "missing-face"; break;
    }
    return "dim " + std::to_string(v.dim) + " cell " + std::to_string(v.cell) + ": " + rule +
           (v.detail.empty() ? "" : " (" + v.detail + ")");
}

namespace {

using VertexList = std::vector<std::int64_t>;

std::string list_string(const VertexList& verts) {
    std::string s = "{";
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(verts[i]);
    }
    return s + "}";
}

// Calls fn(subset) for every size-`choose` subset of `verts`, preserving order.
template <class F>
void for_each_subset(const VertexList& verts, std::size_t choose, F&& fn) {
    std::vector<bool> mask(verts.size(), false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(choose), true);
    VertexList subset;
    do {
        subset.clear();
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (mask[i]) subset.push_back(verts[i]);
        }
        fn(subset);
    } while (std::prev_permutation(mask.begin(), mask.end()));
}

}  // namespace

std::vector<Violation> validate(const WeightedComplex& c) {
    std::vector<Violation> out;
    const auto k0 = static_cast<std::int64_t>(c.vertex_count());

    // Rows that pass the per-cell checks, keyed by dimension, for face lookup.
    std::vector<std::set<VertexList>> present(c.dimension() + 1);
    for (std::int64_t v = 0; v < k0; ++v) present[0].insert({v});

    std::vector<std::vector<bool>> row_ok(c.dimension() + 1);
    for (std::size_t dim = 1; dim <= c.dimension(); ++dim) {
        const IndexTensor& table = c.cells(dim).vertices;
        const std::size_t width = table.extent(1);
        const bool simplex_width = width == dim + 1;
        const bool cube_width = dim < 63 && width == (std::size_t{1} << dim);
        row_ok[dim].assign(table.extent(0), false);
        for (std::size_t r = 0; r < table.extent(0); ++r) {
            const auto row = table.row(r);
            VertexList verts(row.begin(), row.end());
            bool ok = true;
            if (!simplex_width && !cube_width) {
                out.push_back({dim, r, ViolationRule::CellWidth,
                               std::to_string(width) + " vertices"});
                ok = false;
            }
            for (std::int64_t v : verts) {
                if (v < 0 || v >= k0) {
                    out.push_back({dim, r, ViolationRule::IndexOutOfRange,
                                   "vertex " + std::to_string(v) + " of " + std::to_string(k0)});
                    ok = false;
                }
            }
            if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) {
                out.push_back({dim, r, ViolationRule::RepeatedVertex, list_string(verts)});
                ok = false;
            }
            row_ok[dim][r] = ok;
            if (ok) present[dim].insert(std::move(verts));
        }
    }

    for (std::size_t dim = 1; dim <= c.dimension(); ++dim) {
        const IndexTensor& table = c.cells(dim).vertices;
        const std::size_t width = table.extent(1);
        for (std::size_t r = 0; r < table.extent(0); ++r) {
            if (!row_ok[dim][r]) continue;
            const auto row = table.row(r);
            const VertexList verts(row.begin(), row.end());
            const auto& faces = present[dim - 1];
            if (width == dim + 1) {
                // Simplex: every facet obtained by dropping one vertex.
                for_each_subset(verts, width - 1, [&](const VertexList& face) {
                    if (!faces.contains(face)) {
                        out.push_back({dim, r, ViolationRule::MissingFace,
                                       "face " + list_string(face) + " absent"});
                    }
                });
            } else {
                // Cube: exactly 2*dim stored facets of 2^(dim-1) vertices, each
                // vertex lying on exactly dim of them.
                std::size_t found = 0;
                std::vector<std::size_t> cover(verts.size(), 0);
                for_each_subset(verts, width / 2, [&](const VertexList& face) {
                    if (!faces.contains(face)) return;
                    ++found;
                    for (std::size_t i = 0; i < verts.size(); ++i) {
                        if (std::binary_search(face.begin(), face.end(), verts[i])) ++cover[i];
                    }
                });
                const bool covered = std::all_of(cover.begin(), cover.end(),
                                                 [dim](std::size_t n) { return n == dim; });
                if (found != 2 * dim || !covered) {
                    out.push_back({dim, r, ViolationRule::MissingFace,
                                   std::to_string(found) + " of " + std::to_string(2 * dim) +
                                       " facets present"});
                }
            }
        }
    }
    return out;
}

std::string format_double(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    return std::string(buf, end);
}

}  // namespace wect
