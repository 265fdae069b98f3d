#pragma once

#include "wect/complex.hpp"
#include "wect/wecf_types.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>

namespace wect {

struct EngineOptions {
    /// Worker threads across filter columns. 0 defers to the ECT_THREADS
    /// environment variable, then to the hardware concurrency.
    unsigned threads = 0;
    /// Cells gathered per advanced-index/reduce-max/scatter-add round. Bounds
    /// the size of the (cells x width x filters) intermediate.
    std::size_t chunk_cells = std::size_t{1} << 15;
    /// Shared grid half-width for comparing outputs across inputs. When unset
    /// it is the largest |filter value|.
    std::optional<double> max_height;
};

/// Effective worker count for a request; see EngineOptions::threads.
unsigned resolve_threads(unsigned requested);

/// Grid over [-h, h] where h is the override or max |fvals|.
DiscretizationGrid make_grid(const FilterSet& fs, std::int64_t numvals,
                             std::optional<double> max_height = std::nullopt);

/// Sampled WECFs of every filter in `fs`:
///   values(p, q) = sum over cells s with max_{v in s} f_p(v) <= beta(q) of
///                  (-1)^dim(s) * weight(s).
///
/// Vertex filter values are binned with alpha, each cell's bin is the max of
/// its vertices' bins, signed weights are scatter-added per bin and a running
/// sum along the height axis finishes the job. Time and memory are linear in
/// m * (cells + numvals).
WecfMatrix compute_wecfs(const WeightedComplex& c, const FilterSet& fs,
                         const DiscretizationGrid& grid, const EngineOptions& options = {});

WecfMatrix compute_wecfs(const WeightedComplex& c, const FilterSet& fs, std::int64_t numvals,
                         const EngineOptions& options = {});

/// Height filters: coordinates * directions^T, shape (k0 x d).
FilterSet height_filters(const WeightedComplex& c, const DirectionSet& dirs);

/// Directional WECFs, one row per direction.
WecfMatrix compute_wect(const WeightedComplex& c, const DirectionSet& dirs, std::int64_t numvals,
                        const EngineOptions& options = {});

WecfMatrix compute_wect(const WeightedComplex& c, const DirectionSet& dirs,
                        const DiscretizationGrid& grid, const EngineOptions& options = {});

}  // namespace wect
