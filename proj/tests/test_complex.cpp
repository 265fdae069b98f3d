#include "support/fixtures.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace wect;
using namespace wect::testing;

TEST_CASE("weighted Euler characteristic") {
    CHECK(weighted_euler_characteristic(point()).chi == 1.0);
    CHECK(weighted_euler_characteristic(octahedron()).chi == 2.0);

    const WeightedComplex half_edge(Tensor::vector({1, 1}), {cell_block(2, {{0, 1}}, {0.5})});
    CHECK(weighted_euler_characteristic(half_edge).chi == 1.5);

    CHECK(weighted_euler_characteristic(triangle_boundary()).chi == 0.0);
    CHECK(weighted_euler_characteristic(path_graph(7)).chi == 1.0);
}

TEST_CASE("validate") {
    CHECK(validate(octahedron()).empty());
    CHECK(validate(point()).empty());

    SUBCASE("out of range vertex") {
        const WeightedComplex c(ones(2), {unit_block(2, {{0, 2}})});
        const auto v = validate(c);
        REQUIRE(v.size() == 1);
        CHECK(v[0].rule == ViolationRule::IndexOutOfRange);
        CHECK(v[0].dim == 1);
        CHECK(v[0].cell == 0);
    }
    SUBCASE("triangle missing an edge") {
        const WeightedComplex c(ones(3), {unit_block(2, {{0, 1}, {1, 2}}), unit_block(3, {{0, 1, 2}})});
        const auto v = validate(c);
        REQUIRE(v.size() == 1);
        CHECK(v[0].rule == ViolationRule::MissingFace);
        CHECK(v[0].dim == 2);
        CHECK(to_string(v[0]).find("{0,2}") != std::string::npos);
    }
    SUBCASE("repeated vertex") {
        const WeightedComplex c(ones(2), {unit_block(2, {{1, 1}})});
        const auto v = validate(c);
        REQUIRE(v.size() == 1);
        CHECK(v[0].rule == ViolationRule::RepeatedVertex);
    }
    SUBCASE("bad width") {
        const WeightedComplex c(ones(5), {unit_block(2, {}), unit_block(5, {{0, 1, 2, 3, 4}})});
        const auto v = validate(c);
        REQUIRE(!v.empty());
        CHECK(v[0].rule == ViolationRule::CellWidth);
    }
    SUBCASE("square with its four sides") {
        const WeightedComplex ok(ones(4), {unit_block(2, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}),
                                           unit_block(4, {{0, 1, 2, 3}})});
        CHECK(validate(ok).empty());
        const WeightedComplex missing(ones(4), {unit_block(2, {{0, 1}, {0, 2}, {1, 3}}),
                                                unit_block(4, {{0, 1, 2, 3}})});
        const auto v = validate(missing);
        REQUIRE(v.size() == 1);
        CHECK(v[0].rule == ViolationRule::MissingFace);
    }
}

TEST_CASE("cell rows are stored ascending and trailing empty dimensions dropped") {
    const WeightedComplex c(ones(3), {unit_block(2, {{2, 0}}), unit_block(3, {})});
    CHECK(c.dimension() == 1);
    CHECK(c.cells(1).vertices == IndexTensor::matrix({{0, 2}}));
}

TEST_CASE("construction rejects inconsistent shapes") {
    CHECK_THROWS_AS(WeightedComplex(ones(2), {cell_block(2, {{0, 1}}, {1.0, 2.0})}), Error);
    CHECK_THROWS_AS(WeightedComplex(ones(2), {}, Tensor({3, 2})), Error);
}

TEST_CASE("unit weights") {
    std::mt19937_64 rng(3);
    const WeightedComplex c = random_complex(rng, {});
    const WeightedComplex u = unit_weights(c);
    for (double w : u.vertex_weights().data()) CHECK(w == 1.0);
    for (const auto& b : u.blocks()) {
        for (double w : b.weights.data()) CHECK(w == 1.0);
    }
    CHECK(u.blocks().size() == c.blocks().size());
    for (std::size_t d = 1; d <= c.dimension(); ++d) CHECK(u.cells(d).vertices == c.cells(d).vertices);

    const WeightedComplex uu = unit_weights(u);
    CHECK(uu.vertex_weights() == u.vertex_weights());

    // Octahedron with random weights reduces to the sphere.
    const WeightedComplex oct = octahedron();
    std::uniform_real_distribution<double> w(-3, 3);
    std::vector<Tensor> cw;
    for (std::size_t d = 1; d <= oct.dimension(); ++d) {
        Tensor t({oct.cell_count(d)});
        for (double& x : t.data()) x = w(rng);
        cw.push_back(t);
    }
    Tensor vw({6});
    for (double& x : vw.data()) x = w(rng);
    const WeightedComplex weighted = oct.with_weights(vw, cw);
    CHECK(weighted_euler_characteristic(unit_weights(weighted)).chi == 2.0);
}

TEST_CASE("unit-weighted chi equals alternating cell counts") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const WeightedComplex c = random_complex(rng, {});
        long expected = 0;
        for (std::size_t d = 0; d <= c.dimension(); ++d) {
            expected += (d % 2 == 0 ? 1 : -1) * static_cast<long>(c.cell_count(d));
        }
        CHECK(weighted_euler_characteristic(unit_weights(c)).chi == static_cast<double>(expected));
        CHECK(validate(c).empty());
    }
}

TEST_CASE("chi is additive in the weights") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const WeightedComplex a = random_complex(rng, {});
        // Second weighting of the same cells.
        std::uniform_real_distribution<double> w(-1, 1);
        auto reweigh = [&](const WeightedComplex& c) {
            Tensor vw({c.vertex_count()});
            for (double& x : vw.data()) x = w(rng);
            std::vector<Tensor> cw;
            for (std::size_t d = 1; d <= c.dimension(); ++d) {
                Tensor t({c.cell_count(d)});
                for (double& x : t.data()) x = w(rng);
                cw.push_back(t);
            }
            return c.with_weights(vw, cw);
        };
        const WeightedComplex b = reweigh(a);
        Tensor vw = a.vertex_weights();
        for (std::size_t i = 0; i < vw.size(); ++i) vw[i] += b.vertex_weights()[i];
        std::vector<Tensor> cw;
        for (std::size_t d = 1; d <= a.dimension(); ++d) {
            Tensor t = a.cells(d).weights;
            for (std::size_t i = 0; i < t.size(); ++i) t[i] += b.cells(d).weights[i];
            cw.push_back(t);
        }
        const WeightedComplex sum = a.with_weights(vw, cw);
        const double lhs = weighted_euler_characteristic(sum).chi;
        const double rhs =
            weighted_euler_characteristic(a).chi + weighted_euler_characteristic(b).chi;
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)) * 100);
    }
}

TEST_CASE("text format round trip") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const WeightedComplex c = random_complex(rng, {.ambient = trial % 2 == 0 ? 0u : 3u});
        std::stringstream ss;
        write_complex_text(ss, c);
        const WeightedComplex back = read_complex_text(ss);
        CHECK(back.vertex_weights() == c.vertex_weights());
        CHECK(back.coordinates() == c.coordinates());
        REQUIRE(back.dimension() == c.dimension());
        for (std::size_t d = 1; d <= c.dimension(); ++d) {
            CHECK(back.cells(d).vertices == c.cells(d).vertices);
            CHECK(back.cells(d).weights == c.cells(d).weights);
        }
    }
}

TEST_CASE("text format parsing") {
    std::istringstream in(
        "# square, cubical\n"
        "2 2 4 4 1\n"
        "0 0 1   # v0\n"
        "1 0 0.5\n"
        "0 1 0.5\n"
        "1 1 1\n"
        "0 1 1\n0 2 1\n1 3 1\n2 3 1\n"
        "0 1 2 3 1\n");
    const WeightedComplex c = read_complex_text(in);
    CHECK(c.vertex_count() == 4);
    CHECK(c.cells(2).vertices.extent(1) == 4);
    CHECK(validate(c).empty());
    CHECK(weighted_euler_characteristic(c).chi == doctest::Approx(0.0));

    std::istringstream short_in("1 0 2 1\n1\n1\n");
    try {
        (void)read_complex_text(short_in);
        FAIL("expected parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }

    std::istringstream bad_width("2 0 3 0 1\n1\n1\n1\n0 1 1\n");
    CHECK_THROWS_AS((void)read_complex_text(bad_width), Error);
}
