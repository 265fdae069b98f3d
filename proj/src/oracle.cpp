#include "wect/oracle.hpp"

#include <string>

namespace wect::oracle {

namespace {

void check_cells(const WeightedComplex& c) {
    const auto k0 = static_cast<std::int64_t>(c.vertex_count());
    for (const CellBlock& block : c.blocks()) {
        for (std::int64_t v : block.vertices.data()) {
            if (v < 0 || v >= k0) {
                throw Error(ErrorKind::Index, "cell references vertex " + std::to_string(v) +
                                                  " of " + std::to_string(k0));
            }
        }
    }
}

}  // namespace

WecfMatrix naive_wecfs(const WeightedComplex& c, const FilterSet& fs,
                       const DiscretizationGrid& grid) {
    if (fs.fvals.rank() != 2 || fs.fvals.extent(0) != c.vertex_count()) {
        throw Error(ErrorKind::Input, "filter values have shape " + shape_string(fs.fvals.shape()) +
                                          " but the complex has " +
                                          std::to_string(c.vertex_count()) + " vertices");
    }
    check_cells(c);

    const std::size_t m = fs.fvals.extent(1);
    const auto numvals = static_cast<std::size_t>(grid.numvals());
    const std::size_t k0 = c.vertex_count();
    const auto& fvals = fs.fvals;
    Tensor values({m, numvals});

    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t q = 0; q < numvals; ++q) {
            const double threshold = grid.beta(static_cast<std::int64_t>(q));
            double total = 0.0;
            for (std::size_t a = 0; a < k0; ++a) {
                if (fvals(a, p) <= threshold) total += c.vertex_weights()(a);
            }
            for (std::size_t dim = 1; dim <= c.dimension(); ++dim) {
                const CellBlock& block = c.cells(dim);
                const std::size_t width = block.vertices.extent(1);
                const double sign = (dim % 2 == 0) ? 1.0 : -1.0;
                for (std::size_t b = 0; b < block.weights.size(); ++b) {
                    double highest = fvals(static_cast<std::size_t>(block.vertices(b, 0)), p);
                    for (std::size_t j = 1; j < width; ++j) {
                        const double f = fvals(static_cast<std::size_t>(block.vertices(b, j)), p);
                        if (f > highest) highest = f;
                    }
                    if (highest <= threshold) total += sign * block.weights(b);
                }
            }
            values(p, q) = total;
        }
    }
    return {std::move(values), grid};
}

WecfMatrix naive_wect(const WeightedComplex& c, const DirectionSet& dirs,
                      const DiscretizationGrid& grid) {
    if (!c.has_coordinates()) {
        throw Error(ErrorKind::Input, "complex has no vertex coordinates");
    }
    const Tensor& coords = *c.coordinates();
    const Tensor& d = dirs.directions;
    const std::size_t n = coords.extent(1);
    if (d.rank() != 2 || d.extent(1) != n) {
        throw Error(ErrorKind::Input, "direction dimension does not match vertex dimension " +
                                          std::to_string(n));
    }
    const std::size_t k0 = c.vertex_count();
    const std::size_t count = d.extent(0);
    Tensor heights({k0, count});
    for (std::size_t a = 0; a < k0; ++a) {
        for (std::size_t p = 0; p < count; ++p) {
            double h = 0.0;
            for (std::size_t j = 0; j < n; ++j) h += coords(a, j) * d(p, j);
            heights(a, p) = h;
        }
    }
    return naive_wecfs(c, FilterSet{std::move(heights)}, grid);
}

}  // namespace wect::oracle
