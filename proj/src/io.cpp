#include "wect/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace wect {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Input, "cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

namespace {

bool is_space(char ch) {
    return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\v' || ch == '\f';
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

// Walks the header and (for P2) the body of a PGM file, skipping whitespace
// and '#' comments between tokens.
class PgmScanner {
public:
    explicit PgmScanner(std::string_view bytes) : bytes_(bytes) {}

    std::string_view token() {
        skip_space_and_comments();
        const std::size_t start = pos_;
        while (pos_ < bytes_.size() && !is_space(bytes_[pos_]) && bytes_[pos_] != '#') ++pos_;
        if (start == pos_) fail("unexpected end of file");
        return bytes_.substr(start, pos_ - start);
    }

    long number(const char* what) {
        const std::size_t at = offset();
        const std::string_view tok = token();
        long v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0) {
            throw Error(ErrorKind::Parse, "pgm: bad " + std::string(what) + " '" +
                                              std::string(tok) + "' at byte " +
                                              std::to_string(at) + " (line " +
                                              std::to_string(line_at(at)) + ")");
        }
        return v;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::Parse, "pgm: " + what + " at byte " + std::to_string(pos_) +
                                          " (line " + std::to_string(line_at(pos_)) + ")");
    }

    [[nodiscard]] std::size_t offset() {
        skip_space_and_comments();
        return pos_;
    }
    [[nodiscard]] std::size_t raw_position() const noexcept { return pos_; }
    void advance(std::size_t n) noexcept { pos_ += n; }
    [[nodiscard]] std::string_view bytes() const noexcept { return bytes_; }

private:
    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            if (is_space(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    [[nodiscard]] std::size_t line_at(std::size_t at) const {
        return 1 + static_cast<std::size_t>(
                       std::count(bytes_.begin(), bytes_.begin() + static_cast<std::ptrdiff_t>(
                                                                       std::min(at, bytes_.size())),
                                  '\n'));
    }

    std::string_view bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

GrayscaleImage parse_pgm(std::string_view bytes) {
    PgmScanner scan(bytes);
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
        throw Error(ErrorKind::Parse, "pgm: expected magic P2 or P5 at byte 0");
    }
    const bool binary = bytes[1] == '5';
    scan.advance(2);
    if (scan.raw_position() < bytes.size() && !is_space(bytes[scan.raw_position()]) &&
        bytes[scan.raw_position()] != '#') {
        scan.fail("malformed magic number");
    }
    const long width = scan.number("width");
    const long height = scan.number("height");
    const long maxval = scan.number("maxval");
    if (width < 1 || height < 1) scan.fail("image dimensions must be positive");
    if (maxval < 1 || maxval > 255) {
        scan.fail("maxval " + std::to_string(maxval) + " not in [1, 255]");
    }
    const auto cols = static_cast<std::size_t>(width);
    const auto rows = static_cast<std::size_t>(height);
    const std::size_t count = rows * cols;
    const double scale = static_cast<double>(maxval);
    std::vector<double> pixels(count);

    if (binary) {
        // Exactly one whitespace byte separates maxval from the raster.
        std::size_t at = scan.raw_position();
        if (at >= bytes.size() || !is_space(bytes[at])) {
            scan.fail("expected a single whitespace byte after maxval");
        }
        ++at;
        const std::size_t available = bytes.size() - at;
        if (available < count) {
            throw Error(ErrorKind::Parse, "pgm: truncated raster at byte " + std::to_string(at) +
                                              ": expected " + std::to_string(count) +
                                              " bytes, found " + std::to_string(available));
        }
        for (std::size_t i = 0; i < count; ++i) {
            const auto v = static_cast<unsigned char>(bytes[at + i]);
            if (v > maxval) {
                throw Error(ErrorKind::Parse, "pgm: sample " + std::to_string(v) + " at byte " +
                                                  std::to_string(at + i) + " exceeds maxval");
            }
            pixels[i] = static_cast<double>(v) / scale;
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const long v = scan.number("sample");
            if (v > maxval) scan.fail("sample " + std::to_string(v) + " exceeds maxval");
            pixels[i] = static_cast<double>(v) / scale;
        }
    }
    return GrayscaleImage(rows, cols, std::move(pixels));
}

namespace {

double parse_number(std::string_view tok, std::size_t line, const char* source) {
    tok = trim(tok);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw Error(ErrorKind::Parse, std::string(source) + ": line " + std::to_string(line) +
                                          ": bad number '" + std::string(tok) + "'");
    }
    return v;
}

// Splits text into non-empty lines of numeric fields, reporting 1-based line numbers.
template <class F>
void for_each_record(std::string_view text, bool comma_only, const char* source, F&& fn) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        std::vector<double> fields;
        if (comma_only) {
            while (true) {
                const std::size_t comma = line.find(',');
                fields.push_back(parse_number(line.substr(0, comma), line_no, source));
                if (comma == std::string_view::npos) break;
                line = line.substr(comma + 1);
            }
        } else {
            std::size_t pos = 0;
            while (pos < line.size()) {
                while (pos < line.size() && (is_space(line[pos]) || line[pos] == ',')) ++pos;
                const std::size_t start = pos;
                while (pos < line.size() && !is_space(line[pos]) && line[pos] != ',') ++pos;
                if (pos > start) {
                    fields.push_back(parse_number(line.substr(start, pos - start), line_no, source));
                }
            }
        }
        fn(line_no, std::move(fields));
    }
}

}  // namespace

GrayscaleImage parse_csv_grid(std::string_view text) {
    std::vector<double> values;
    std::size_t cols = 0;
    std::size_t rows = 0;
    bool over_one = false;
    for_each_record(text, true, "csv", [&](std::size_t line, std::vector<double> fields) {
        if (rows == 0) {
            cols = fields.size();
        } else if (fields.size() != cols) {
            throw Error(ErrorKind::Parse, "csv: line " + std::to_string(line) + ": " +
                                              std::to_string(fields.size()) +
                                              " values, expected " + std::to_string(cols));
        }
        for (double v : fields) {
            if (!(v >= 0.0 && v <= 255.0)) {
                throw Error(ErrorKind::Parse, "csv: line " + std::to_string(line) + ": value " +
                                                  format_double(v) + " outside [0, 255]");
            }
            over_one = over_one || v > 1.0;
            values.push_back(v);
        }
        ++rows;
    });
    if (rows == 0) throw Error(ErrorKind::Parse, "csv: no data rows");
    if (over_one) {
        for (double& v : values) v /= 255.0;
    }
    return GrayscaleImage(rows, cols, std::move(values));
}

GrayscaleImage load_image(const std::string& path, ImageKind kind) {
    const std::string bytes = read_file(path);
    try {
        return kind == ImageKind::Pgm ? parse_pgm(bytes) : parse_csv_grid(bytes);
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.what());
    }
}

Tensor parse_matrix(std::string_view text) {
    std::vector<double> values;
    std::size_t cols = 0;
    std::size_t rows = 0;
    for_each_record(text, false, "matrix", [&](std::size_t line, std::vector<double> fields) {
        if (rows == 0) {
            cols = fields.size();
        } else if (fields.size() != cols) {
            throw Error(ErrorKind::Parse, "matrix: line " + std::to_string(line) + ": " +
                                              std::to_string(fields.size()) +
                                              " values, expected " + std::to_string(cols));
        }
        values.insert(values.end(), fields.begin(), fields.end());
        ++rows;
    });
    return Tensor({rows, cols}, std::move(values));
}

Tensor load_matrix(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_matrix(text);
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.what());
    }
}

FilterSet load_filters(const std::string& path) { return {load_matrix(path)}; }

DirectionSet load_directions(const std::string& path) {
    Tensor d = load_matrix(path);
    for (std::size_t p = 0; p < d.extent(0); ++p) {
        double norm = 0.0;
        for (double v : d.row(p)) norm += v * v;
        norm = std::sqrt(norm);
        if (norm == 0.0 || !std::isfinite(norm)) {
            throw Error(ErrorKind::Input, path + ": direction " + std::to_string(p) +
                                              " has zero or non-finite length");
        }
        for (double& v : d.row(p)) v /= norm;
    }
    return {std::move(d)};
}

namespace {

template <class T>
void put_le(std::ostream& out, T value) {
    static_assert(sizeof(T) == 8);
    std::uint64_t bits = 0;
    std::memcpy(&bits, &value, 8);
    char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((bits >> (8 * i)) & 0xff);
    out.write(buf, 8);
}

template <class T>
bool get_le(std::istream& in, T& value) {
    static_assert(sizeof(T) == 8);
    unsigned char buf[8];
    if (!in.read(reinterpret_cast<char*>(buf), 8)) return false;
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= std::uint64_t{buf[i]} << (8 * i);
    std::memcpy(&value, &bits, 8);
    return true;
}

std::string direction_label(const DirectionSet& dirs, std::size_t p) {
    std::string label;
    for (std::size_t j = 0; j < dirs.ambient_dimension(); ++j) {
        if (j > 0) label += ';';
        label += format_double(dirs.directions(p, j));
    }
    return label;
}

}  // namespace

void write_result(std::ostream& out, const WecfMatrix& w, const DirectionSet* dirs,
                  ResultFormat format) {
    const std::size_t m = w.values.extent(0);
    const std::size_t numvals = static_cast<std::size_t>(w.grid.numvals());
    if (dirs && dirs->count() != m) {
        throw Error(ErrorKind::Input, "result has " + std::to_string(m) + " rows but " +
                                          std::to_string(dirs->count()) + " directions");
    }
    if (format == ResultFormat::Csv) {
        out << "height";
        for (double h : w.grid.heights()) out << ',' << format_double(h);
        out << '\n';
        for (std::size_t p = 0; p < m; ++p) {
            out << (dirs ? direction_label(*dirs, p) : std::to_string(p));
            for (std::size_t q = 0; q < numvals; ++q) out << ',' << format_double(w.values(p, q));
            out << '\n';
        }
    } else {
        put_le(out, static_cast<std::uint64_t>(m));
        put_le(out, static_cast<std::uint64_t>(numvals));
        for (double v : w.values.data()) put_le(out, v);
        if (dirs) {
            for (double v : dirs->directions.data()) put_le(out, v);
        }
    }
}

void write_result(const std::string& path, const WecfMatrix& w, const DirectionSet* dirs,
                  ResultFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
    write_result(out, w, dirs, format);
    out.flush();
    if (!out) throw Error(ErrorKind::Io, "write failed for '" + path + "'");
}

ResultFile read_result_csv(std::istream& in) {
    ResultFile result;
    std::string line;
    std::size_t line_no = 0;
    std::vector<double> values;
    auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        std::string part;
        std::istringstream ss(s);
        while (std::getline(ss, part, ',')) parts.push_back(part);
        return parts;
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto parts = split(line);
        if (line_no == 1) {
            if (parts.empty() || parts[0] != "height") {
                throw Error(ErrorKind::Parse, "result csv: header must start with 'height'");
            }
            for (std::size_t i = 1; i < parts.size(); ++i) {
                result.heights.push_back(parse_number(parts[i], line_no, "result csv"));
            }
            continue;
        }
        if (parts.size() != result.heights.size() + 1) {
            throw Error(ErrorKind::Parse, "result csv: line " + std::to_string(line_no) +
                                              " has " + std::to_string(parts.size()) + " fields");
        }
        result.labels.push_back(parts[0]);
        for (std::size_t i = 1; i < parts.size(); ++i) {
            values.push_back(parse_number(parts[i], line_no, "result csv"));
        }
    }
    if (line_no == 0) throw Error(ErrorKind::Parse, "result csv: empty file");
    result.values = Tensor({result.labels.size(), result.heights.size()}, std::move(values));
    return result;
}

ResultFile read_result_raw64(std::istream& in) {
    std::uint64_t m = 0;
    std::uint64_t numvals = 0;
    if (!get_le(in, m) || !get_le(in, numvals)) {
        throw Error(ErrorKind::Parse, "raw64: truncated 16-byte header");
    }
    std::vector<double> values(static_cast<std::size_t>(m * numvals));
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!get_le(in, values[i])) {
            throw Error(ErrorKind::Parse, "raw64: expected " + std::to_string(values.size()) +
                                              " values, found " + std::to_string(i));
        }
    }
    ResultFile result;
    result.values = Tensor({static_cast<std::size_t>(m), static_cast<std::size_t>(numvals)},
                           std::move(values));
    std::vector<double> tail;
    double v = 0.0;
    while (get_le(in, v)) tail.push_back(v);
    if (!tail.empty()) {
        if (m == 0 || tail.size() % m != 0) {
            throw Error(ErrorKind::Parse, "raw64: trailing direction block of " +
                                              std::to_string(tail.size()) +
                                              " values does not split into " +
                                              std::to_string(m) + " rows");
        }
        const std::size_t n = tail.size() / m;
        result.directions = Tensor({static_cast<std::size_t>(m), n}, std::move(tail));
    }
    return result;
}

}  // namespace wect
