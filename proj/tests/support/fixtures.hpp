#pragma once

// Hand-built complexes and random generators shared by the test suites.

#include "wect/complex.hpp"
#include "wect/wecf_types.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace wect::testing {

inline CellBlock cell_block(std::size_t width, const std::vector<std::vector<std::int64_t>>& rows,
                            const std::vector<double>& weights) {
    std::vector<std::int64_t> flat;
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    return {IndexTensor({rows.size(), width}, std::move(flat)), Tensor({weights.size()}, weights)};
}

inline CellBlock unit_block(std::size_t width, const std::vector<std::vector<std::int64_t>>& rows) {
    return cell_block(width, rows, std::vector<double>(rows.size(), 1.0));
}

inline Tensor ones(std::size_t n) { return Tensor({n}, std::vector<double>(n, 1.0)); }

inline WeightedComplex point() { return WeightedComplex(ones(1), {}); }

/// Path graph on `n` vertices along the x axis.
inline WeightedComplex path_graph(std::size_t n) {
    std::vector<std::vector<std::int64_t>> edges;
    std::vector<double> coords;
    for (std::size_t i = 0; i < n; ++i) {
        coords.push_back(static_cast<double>(i));
        coords.push_back(0.0);
        if (i + 1 < n) edges.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(i + 1)});
    }
    return WeightedComplex(ones(n), {unit_block(2, edges)}, Tensor({n, 2}, coords));
}

inline WeightedComplex triangle_boundary() {
    return WeightedComplex(ones(3), {unit_block(2, {{0, 1}, {1, 2}, {0, 2}})},
                           Tensor({3, 2}, {0.0, 0.0, 1.0, 0.0, 0.0, 1.0}));
}

/// Boundary of the octahedron with vertices +-e1, +-e2, +-e3 (0..5 as
/// +x, -x, +y, -y, +z, -z).
inline WeightedComplex octahedron() {
    std::vector<std::vector<std::int64_t>> edges;
    for (std::int64_t a = 0; a < 6; ++a) {
        for (std::int64_t b = a + 1; b < 6; ++b) {
            if (a / 2 != b / 2) edges.push_back({a, b});
        }
    }
    std::vector<std::vector<std::int64_t>> tris;
    for (std::int64_t x : {0, 1}) {
        for (std::int64_t y : {2, 3}) {
            for (std::int64_t z : {4, 5}) tris.push_back({x, y, z});
        }
    }
    const std::vector<double> coords{1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 1, 0, 0, -1};
    return WeightedComplex(ones(6), {unit_block(2, edges), unit_block(3, tris)},
                           Tensor({6, 3}, coords));
}

/// Segment v0 = (0, 0), v1 = (1, 0), unit weights.
inline WeightedComplex segment() {
    return WeightedComplex(ones(2), {unit_block(2, {{0, 1}})},
                           Tensor({2, 2}, {0.0, 0.0, 1.0, 0.0}));
}

struct RandomComplexSpec {
    std::size_t max_dim = 3;
    std::size_t max_cells = 500;
    std::size_t max_vertices = 60;
    double weight_lo = -1.0;
    double weight_hi = 1.0;
    std::size_t ambient = 0;  // 0: no coordinates
};

/// Face-closed random simplicial complex built from random top simplices.
inline WeightedComplex random_complex(std::mt19937_64& rng, const RandomComplexSpec& spec) {
    std::uniform_int_distribution<std::size_t> vcount(1, spec.max_vertices);
    const std::size_t k0 = vcount(rng);
    std::uniform_int_distribution<std::size_t> top_dim(1, spec.max_dim);
    std::uniform_int_distribution<std::int64_t> vertex(0, static_cast<std::int64_t>(k0) - 1);
    std::uniform_real_distribution<double> weight(spec.weight_lo, spec.weight_hi);

    std::vector<std::set<std::vector<std::int64_t>>> cells(spec.max_dim + 1);
    std::size_t total = k0;
    const std::size_t attempts = std::uniform_int_distribution<std::size_t>(0, 200)(rng);
    for (std::size_t t = 0; t < attempts && k0 >= 2; ++t) {
        const std::size_t d = std::min(top_dim(rng), k0 - 1);
        std::set<std::int64_t> verts;
        while (verts.size() < d + 1) verts.insert(vertex(rng));
        const std::vector<std::int64_t> top(verts.begin(), verts.end());

        // Add every face of dimension >= 1 not already present, if it fits.
        std::vector<std::pair<std::size_t, std::vector<std::int64_t>>> fresh;
        const std::size_t n = top.size();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<std::int64_t> face;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (1u << i)) face.push_back(top[i]);
            }
            if (face.size() < 2) continue;
            if (!cells[face.size() - 1].contains(face)) fresh.emplace_back(face.size() - 1, face);
        }
        if (total + fresh.size() > spec.max_cells) break;
        for (auto& [dim, face] : fresh) cells[dim].insert(face);
        total += fresh.size();
    }

    std::vector<double> vweights(k0);
    for (double& w : vweights) w = weight(rng);
    std::vector<CellBlock> blocks;
    for (std::size_t dim = 1; dim <= spec.max_dim; ++dim) {
        std::vector<std::vector<std::int64_t>> rows(cells[dim].begin(), cells[dim].end());
        std::shuffle(rows.begin(), rows.end(), rng);
        std::vector<double> weights(rows.size());
        for (double& w : weights) w = weight(rng);
        blocks.push_back(cell_block(dim + 1, rows, weights));
    }
    std::optional<Tensor> coords;
    if (spec.ambient > 0) {
        std::uniform_real_distribution<double> coord(-1.0, 1.0);
        std::vector<double> xs(k0 * spec.ambient);
        for (double& x : xs) x = coord(rng);
        coords = Tensor({k0, spec.ambient}, std::move(xs));
    }
    return WeightedComplex(Tensor({k0}, std::move(vweights)), std::move(blocks), std::move(coords));
}

/// Random (k0 x m) filters. Half the time values come from a small lattice so
/// that ties and exact grid hits are common.
inline FilterSet random_filters(std::mt19937_64& rng, std::size_t k0, std::size_t m) {
    std::uniform_real_distribution<double> cont(-2.0, 2.0);
    std::uniform_int_distribution<int> lattice(-4, 4);
    const bool discrete = std::bernoulli_distribution(0.5)(rng);
    Tensor f({k0, m});
    for (double& v : f.data()) v = discrete ? 0.5 * lattice(rng) : cont(rng);
    return {std::move(f)};
}

}  // namespace wect::testing
