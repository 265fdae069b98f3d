#include "wect/engine.hpp"

#include "wect/tensor_ops.hpp"

#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace wect {

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ECT_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

DiscretizationGrid make_grid(const FilterSet& fs, std::int64_t numvals,
                             std::optional<double> max_height) {
    const double data_max = max_abs_filter_value(fs);
    return DiscretizationGrid(max_height.value_or(data_max), numvals);
}

namespace {

template <class T>
BasicTensor<T> column_slice(const BasicTensor<T>& t, std::size_t first, std::size_t last) {
    if (first == 0 && last == t.extent(1)) return t;
    const std::size_t rows = t.extent(0);
    BasicTensor<T> out({rows, last - first});
    for (std::size_t i = 0; i < rows; ++i) {
        const auto src = t.row(i).subspan(first, last - first);
        std::copy(src.begin(), src.end(), out.row(i).begin());
    }
    return out;
}

IndexTensor row_slice(const IndexTensor& t, std::size_t first, std::size_t last) {
    if (first == 0 && last == t.extent(0)) return t;
    const std::size_t width = t.extent(1);
    const auto src = t.data().subspan(first * width, (last - first) * width);
    return IndexTensor({last - first, width}, std::vector<std::int64_t>(src.begin(), src.end()));
}

// DiffWECFs for one group of filters, given their bin indices (k0 x g).
Tensor diff_wecfs(const WeightedComplex& c, const IndexTensor& vertex_bins, std::int64_t numvals,
                  std::size_t chunk_cells) {
    const std::size_t g = vertex_bins.extent(1);
    Tensor diff = zeros({g, static_cast<std::size_t>(numvals)});
    scatter_add(diff, transpose(vertex_bins), c.vertex_weights());

    for (std::size_t dim = 1; dim <= c.dimension(); ++dim) {
        const CellBlock& block = c.cells(dim);
        const double sign = (dim % 2 == 0) ? 1.0 : -1.0;
        const Tensor signed_weights =
            map_elementwise(block.weights, [sign](double w) { return sign * w; });
        const std::size_t k = block.weights.size();
        for (std::size_t first = 0; first < k; first += chunk_cells) {
            const std::size_t last = std::min(k, first + chunk_cells);
            const IndexTensor simp_bins = advanced_index(vertex_bins, row_slice(block.vertices, first, last));
            const IndexTensor cell_bins = rmax(simp_bins, 1);
            scatter_add(diff, transpose(cell_bins),
                        signed_weights.data().subspan(first, last - first));
        }
    }
    return diff;
}

}  // namespace

WecfMatrix compute_wecfs(const WeightedComplex& c, const FilterSet& fs,
                         const DiscretizationGrid& grid, const EngineOptions& options) {
    if (fs.fvals.rank() != 2 || fs.vertex_count() != c.vertex_count()) {
        throw Error(ErrorKind::Input, "filter values have shape " + shape_string(fs.fvals.shape()) +
                                          " but the complex has " +
                                          std::to_string(c.vertex_count()) + " vertices");
    }
    const std::size_t m = fs.filter_count();
    const auto numvals = static_cast<std::size_t>(grid.numvals());
    if (m == 0) return {Tensor({0, numvals}), grid};

    const IndexTensor vertex_bins =
        map_elementwise(fs.fvals, [&grid](double t) { return grid.alpha(t); });

    const std::size_t chunk = std::max<std::size_t>(1, options.chunk_cells);
    const std::size_t groups = std::min<std::size_t>(resolve_threads(options.threads), m);

    Tensor diff;
    if (groups <= 1) {
        diff = diff_wecfs(c, vertex_bins, grid.numvals(), chunk);
    } else {
        // Row p of DiffWECFs depends only on column p of the bins, so filter
        // groups are independent and each keeps the sequential per-row order.
        std::vector<Tensor> parts(groups);
        std::vector<std::exception_ptr> errors(groups);
        std::vector<std::size_t> bounds(groups + 1);
        for (std::size_t g = 0; g <= groups; ++g) bounds[g] = g * m / groups;
        {
            std::vector<std::jthread> workers;
            for (std::size_t g = 0; g < groups; ++g) {
                workers.emplace_back([&, g] {
                    try {
                        parts[g] = diff_wecfs(c, column_slice(vertex_bins, bounds[g], bounds[g + 1]),
                                              grid.numvals(), chunk);
                    } catch (...) {
                        errors[g] = std::current_exception();
                    }
                });
            }
        }
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
        diff = Tensor({m, numvals});
        for (std::size_t g = 0; g < groups; ++g) {
            const auto src = parts[g].data();
            std::copy(src.begin(), src.end(), diff.data().begin() +
                                                  static_cast<std::ptrdiff_t>(bounds[g] * numvals));
        }
    }
    return {cumsum(diff), grid};
}

WecfMatrix compute_wecfs(const WeightedComplex& c, const FilterSet& fs, std::int64_t numvals,
                         const EngineOptions& options) {
    return compute_wecfs(c, fs, make_grid(fs, numvals, options.max_height), options);
}

FilterSet height_filters(const WeightedComplex& c, const DirectionSet& dirs) {
    if (!c.has_coordinates()) {
        throw Error(ErrorKind::Input, "complex has no vertex coordinates");
    }
    if (dirs.directions.rank() != 2 || dirs.ambient_dimension() != c.ambient_dimension()) {
        throw Error(ErrorKind::Input, "directions have shape " +
                                          shape_string(dirs.directions.shape()) +
                                          " but vertices live in dimension " +
                                          std::to_string(c.ambient_dimension()));
    }
    return {matmul(*c.coordinates(), transpose(dirs.directions))};
}

WecfMatrix compute_wect(const WeightedComplex& c, const DirectionSet& dirs, std::int64_t numvals,
                        const EngineOptions& options) {
    const FilterSet fs = height_filters(c, dirs);
    return compute_wecfs(c, fs, make_grid(fs, numvals, options.max_height), options);
}

WecfMatrix compute_wect(const WeightedComplex& c, const DirectionSet& dirs,
                        const DiscretizationGrid& grid, const EngineOptions& options) {
    return compute_wecfs(c, height_filters(c, dirs), grid, options);
}

}  // namespace wect
