#include "wect/complex.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace wect {

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    /// Next line with at least one token; comments stripped. False at EOF.
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            tokens.clear();
            std::istringstream ss(line);
            std::string tok;
            while (ss >> tok) tokens.push_back(tok);
            if (!tokens.empty()) return true;
        }
        return false;
    }

    [[nodiscard]] std::size_t line() const noexcept { return line_no_; }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_no_) + ": " + what);
    }

    double number(const std::string& tok) const {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) fail("bad number '" + tok + "'");
        return v;
    }

    std::int64_t integer(const std::string& tok) const {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) fail("bad integer '" + tok + "'");
        return v;
    }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

}  // namespace

WeightedComplex read_complex_text(std::istream& in) {
    LineReader reader(in);
    std::vector<std::string> tok;
    if (!reader.next(tok)) reader.fail("missing header");
    if (tok.size() < 3) reader.fail("header needs 'dim n k0 ...'");
    const std::int64_t dim = reader.integer(tok[0]);
    const std::int64_t n = reader.integer(tok[1]);
    if (dim < 0 || n < 0) reader.fail("negative dim or ambient dimension");
    if (tok.size() != static_cast<std::size_t>(dim) + 3) {
        reader.fail("header lists " + std::to_string(tok.size() - 2) + " cell counts, expected " +
                    std::to_string(dim + 1));
    }
    std::vector<std::size_t> counts;
    for (std::size_t i = 2; i < tok.size(); ++i) {
        const std::int64_t k = reader.integer(tok[i]);
        if (k < 0) reader.fail("negative cell count");
        counts.push_back(static_cast<std::size_t>(k));
    }

    const std::size_t k0 = counts[0];
    const auto ambient = static_cast<std::size_t>(n);
    std::vector<double> coords;
    std::vector<double> vweights;
    coords.reserve(k0 * ambient);
    vweights.reserve(k0);
    for (std::size_t a = 0; a < k0; ++a) {
        if (!reader.next(tok)) reader.fail("expected " + std::to_string(k0) + " vertex lines");
        if (tok.size() != ambient + 1) {
            reader.fail("vertex line needs " + std::to_string(ambient) +
                        " coordinates and a weight, got " + std::to_string(tok.size()) +
                        " values");
        }
        for (std::size_t j = 0; j < ambient; ++j) coords.push_back(reader.number(tok[j]));
        vweights.push_back(reader.number(tok[ambient]));
    }

    std::vector<CellBlock> blocks;
    for (std::size_t d = 1; d < counts.size(); ++d) {
        const std::size_t k = counts[d];
        std::size_t width = d + 1;
        std::vector<std::int64_t> verts;
        std::vector<double> weights;
        for (std::size_t b = 0; b < k; ++b) {
            if (!reader.next(tok)) {
                reader.fail("expected " + std::to_string(k) + " lines of dimension " +
                            std::to_string(d) + " cells");
            }
            if (b == 0) {
                width = tok.size() - 1;
                const bool cube = d < 63 && width == (std::size_t{1} << d);
                if (width != d + 1 && !cube) {
                    reader.fail("dimension " + std::to_string(d) + " cell has " +
                                std::to_string(width) + " vertices");
                }
            } else if (tok.size() != width + 1) {
                reader.fail("cell width differs from the first cell of its dimension");
            }
            for (std::size_t j = 0; j < width; ++j) verts.push_back(reader.integer(tok[j]));
            weights.push_back(reader.number(tok[width]));
        }
        blocks.push_back({IndexTensor({k, width}, std::move(verts)),
                          Tensor({k}, std::move(weights))});
    }
    if (reader.next(tok)) reader.fail("trailing data after last cell");

    std::optional<Tensor> coordinates;
    if (ambient > 0) coordinates = Tensor({k0, ambient}, std::move(coords));
    return WeightedComplex(Tensor({k0}, std::move(vweights)), std::move(blocks),
                           std::move(coordinates));
}

void write_complex_text(std::ostream& out, const WeightedComplex& c) {
    const std::size_t n = c.ambient_dimension();
    out << c.dimension() << ' ' << n;
    for (std::size_t d = 0; d <= c.dimension(); ++d) out << ' ' << c.cell_count(d);
    out << '\n';
    for (std::size_t a = 0; a < c.vertex_count(); ++a) {
        for (std::size_t j = 0; j < n; ++j) out << format_double((*c.coordinates())(a, j)) << ' ';
        out << format_double(c.vertex_weights()(a)) << '\n';
    }
    for (std::size_t d = 1; d <= c.dimension(); ++d) {
        const CellBlock& block = c.cells(d);
        for (std::size_t b = 0; b < block.weights.size(); ++b) {
            for (std::int64_t v : block.vertices.row(b)) out << v << ' ';
            out << format_double(block.weights(b)) << '\n';
        }
    }
}

WeightedComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Input, "cannot open complex file '" + path + "'");
    try {
        return read_complex_text(in);
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.what());
    }
}

void save_complex(const std::string& path, const WeightedComplex& c) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Io, "cannot write complex file '" + path + "'");
    write_complex_text(out, c);
    if (!out) throw Error(ErrorKind::Io, "write failed for '" + path + "'");
}

}  // namespace wect
