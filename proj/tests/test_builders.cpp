#include "wect/bench.hpp"
#include "wect/builders.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>

using namespace wect;

namespace {

struct Counts {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t tops = 0;
};

// Counts cells by enumerating pixel subsets, independent of the builders.
Counts enumerate_counts(std::size_t rows, std::size_t cols, bool freudenthal) {
    const std::size_t n = rows * cols;
    auto adjacent = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        const long dr = static_cast<long>(b / cols) - static_cast<long>(a / cols);
        const long dc = static_cast<long>(b % cols) - static_cast<long>(a % cols);
        if (std::abs(dr) + std::abs(dc) == 1) return true;
        return freudenthal && dr == 1 && dc == 1;
    };
    Counts out{n, 0, 0};
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!adjacent(a, b)) continue;
            ++out.edges;
            if (!freudenthal) continue;
            for (std::size_t c = b + 1; c < n; ++c) {
                if (adjacent(a, c) && adjacent(b, c)) ++out.tops;
            }
        }
    }
    if (!freudenthal) {
        // Unit squares are the 4-cycles of the grid graph.
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                for (std::size_t c = b + 1; c < n; ++c)
                    for (std::size_t d = c + 1; d < n; ++d) {
                        const std::size_t v[4] = {a, b, c, d};
                        bool cycle = true;
                        for (std::size_t i = 0; i < 4 && cycle; ++i) {
                            int degree = 0;
                            for (std::size_t j = 0; j < 4; ++j) {
                                if (i != j && adjacent(v[i], v[j])) ++degree;
                            }
                            cycle = degree == 2;
                        }
                        if (cycle) ++out.tops;
                    }
    }
    return out;
}

GrayscaleImage constant(std::size_t r, std::size_t c, double v) {
    return GrayscaleImage(r, c, std::vector<double>(r * c, v));
}

double unit_chi(const WeightedComplex& c) {
    return weighted_euler_characteristic(unit_weights(c)).chi;
}

}  // namespace

TEST_CASE("freudenthal small cases") {
    const WeightedComplex two = freudenthal_from_image(constant(2, 2, 0.5));
    CHECK(two.cell_count(0) == 4);
    CHECK(two.cell_count(1) == 5);
    CHECK(two.cell_count(2) == 2);
    CHECK(unit_chi(two) == 1.0);

    const WeightedComplex one = freudenthal_from_image(constant(1, 1, 0.2));
    CHECK(one.vertex_count() == 1);
    CHECK(one.dimension() == 0);
    CHECK(unit_chi(one) == 1.0);
}

TEST_CASE("cubical small cases") {
    const WeightedComplex two = cubical_from_image(constant(2, 2, 0.5));
    CHECK(two.cell_count(0) == 4);
    CHECK(two.cell_count(1) == 4);
    CHECK(two.cell_count(2) == 1);
    CHECK(unit_chi(two) == 1.0);

    const WeightedComplex strip = cubical_from_image(constant(1, 5, 0.5));
    CHECK(strip.cell_count(0) == 5);
    CHECK(strip.cell_count(1) == 4);
    CHECK(strip.cell_count(2) == 0);
    CHECK(unit_chi(strip) == 1.0);
}

TEST_CASE("cell counts match enumeration and closed forms") {
    for (std::size_t r = 1; r <= 6; ++r) {
        for (std::size_t c = 1; c <= 6; ++c) {
            CAPTURE(r);
            CAPTURE(c);
            const GrayscaleImage img = random_image(r, c, r * 10 + c);
            for (bool fr : {true, false}) {
                const WeightedComplex k = fr ? freudenthal_from_image(img) : cubical_from_image(img);
                const Counts e = enumerate_counts(r, c, fr);
                CHECK(k.cell_count(0) == e.vertices);
                CHECK(k.cell_count(1) == e.edges);
                CHECK(k.cell_count(2) == e.tops);

                const std::size_t sq = (r - 1) * (c - 1);
                CHECK(e.vertices == r * c);
                CHECK(e.edges == r * (c - 1) + c * (r - 1) + (fr ? sq : 0));
                CHECK(e.tops == (fr ? 2 * sq : sq));
                CHECK(unit_chi(k) == 1.0);
            }
        }
    }
}

TEST_CASE("builder outputs validate for random sizes up to 32") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::size_t> side(1, 32);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t r = side(rng);
        const std::size_t c = side(rng);
        const GrayscaleImage img = random_image(r, c, rng());
        for (bool fr : {true, false}) {
            const WeightedComplex k = fr ? freudenthal_from_image(img) : cubical_from_image(img);
            CHECK(validate(k).empty());
            CHECK(unit_chi(k) == 1.0);

            // Every cell weighs at least as much as each of its vertices.
            for (std::size_t d = 1; d <= k.dimension(); ++d) {
                const CellBlock& b = k.cells(d);
                for (std::size_t i = 0; i < b.weights.size(); ++i) {
                    for (std::int64_t v : b.vertices.row(i)) {
                        CHECK(b.weights(i) >= k.vertex_weights()(static_cast<std::size_t>(v)));
                    }
                }
            }
            const WeightedComplex cut = fr ? freudenthal_from_image(img, 0.5)
                                           : cubical_from_image(img, 0.5);
            CHECK(validate(cut).empty());
        }
    }
}

TEST_CASE("coordinates are centered and scaled") {
    const WeightedComplex k = freudenthal_from_image(random_image(3, 5, 1));
    const Tensor& x = *k.coordinates();
    CHECK(x(0, 0) == -0.5);
    CHECK(x(0, 1) == -0.25);
    CHECK(x(14, 0) == 0.5);
    CHECK(x(14, 1) == 0.25);
    // Pixel (r=1, c=2) is the image center.
    CHECK(x(7, 0) == 0.0);
    CHECK(x(7, 1) == 0.0);
}

TEST_CASE("threshold") {
    std::vector<double> px{0.9, 0.1, 0.8, 0.7};
    const GrayscaleImage img(2, 2, px);
    const WeightedComplex cut = freudenthal_from_image(img, 0.5);
    CHECK(cut.vertex_count() == 3);
    CHECK(cut.cell_count(1) == 3);  // vertical, diagonal and bottom edges survive
    CHECK(cut.cell_count(2) == 1);
    CHECK(validate(cut).empty());

    // Thresholding at zero keeps everything when all pixels are positive.
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> v(7 * 9);
        for (double& p : v) p = (1 + rng() % 255) / 255.0;
        const GrayscaleImage pos(7, 9, v);
        for (bool fr : {true, false}) {
            const WeightedComplex a = fr ? freudenthal_from_image(pos) : cubical_from_image(pos);
            const WeightedComplex b = fr ? freudenthal_from_image(pos, 0.0) : cubical_from_image(pos, 0.0);
            CHECK(a.vertex_weights() == b.vertex_weights());
            CHECK(a.coordinates() == b.coordinates());
            for (std::size_t d = 1; d <= a.dimension(); ++d) {
                CHECK(a.cells(d).vertices == b.cells(d).vertices);
                CHECK(a.cells(d).weights == b.cells(d).weights);
            }
        }
    }
}

TEST_CASE("intensity filter") {
    const GrayscaleImage flat = constant(3, 4, 0.5);
    const FilterSet f = intensity_filter(flat, cubical_from_image(flat));
    CHECK(f.fvals.shape() == Shape{12, 1});
    for (double v : f.fvals.data()) CHECK(v == 0.5);

    const GrayscaleImage pair(1, 2, {0.0, 1.0});
    CHECK(intensity_filter(pair, freudenthal_from_image(pair)).fvals ==
          Tensor::matrix({{0.0}, {1.0}}));

    const GrayscaleImage img = random_image(5, 6, 2);
    const WeightedComplex k = freudenthal_from_image(img);
    const FilterSet g = intensity_filter(img, k);
    for (std::size_t a = 0; a < k.vertex_count(); ++a) CHECK(g.fvals(a, 0) == k.vertex_weights()(a));

    const GrayscaleImage bright(2, 2, {0.9, 0.1, 0.8, 0.7});
    CHECK_THROWS_AS((void)intensity_filter(bright, freudenthal_from_image(bright, 0.5)), Error);
}

TEST_CASE("image validity") {
    CHECK_THROWS_AS(GrayscaleImage(0, 3, {}), Error);
    CHECK_THROWS_AS(GrayscaleImage(1, 2, {0.5, 1.5}), Error);
    CHECK_THROWS_AS(GrayscaleImage(2, 2, {0.5}), Error);
}

TEST_CASE("directions") {
    const DirectionSet four = directions(2, 4);
    const double expected[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (std::size_t p = 0; p < 4; ++p) {
        CHECK(std::abs(four.directions(p, 0) - expected[p][0]) <= 1e-12);
        CHECK(std::abs(four.directions(p, 1) - expected[p][1]) <= 1e-12);
    }
    CHECK(directions(2, 1).directions == Tensor::matrix({{1.0, 0.0}}));

    const DirectionSet a = directions(3, 100, 42);
    const DirectionSet b = directions(3, 100, 42);
    CHECK(a.directions == b.directions);
    CHECK(!(a.directions == directions(3, 100, 43).directions));
    for (std::size_t p = 0; p < 100; ++p) {
        double norm = 0.0;
        for (double v : a.directions.row(p)) norm += v * v;
        CHECK(std::abs(std::sqrt(norm) - 1.0) <= 1e-12);
    }
    CHECK_THROWS_AS((void)directions(1, 3), Error);
}
