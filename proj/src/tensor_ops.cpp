#include "wect/tensor_ops.hpp"

namespace wect {

Tensor zeros(const Shape& shape) {
    if (shape.empty()) {
        throw Error(ErrorKind::InvalidShape, "zeros: empty shape");
    }
    for (std::size_t extent : shape) {
        if (extent == 0) {
            throw Error(ErrorKind::InvalidShape,
                        "zeros: non-positive extent in shape " + shape_string(shape));
        }
    }
    return Tensor(shape);
}

Tensor matmul(const Tensor& t, const Tensor& s) {
    if (t.rank() != 2 || s.rank() != 2 || t.extent(1) != s.extent(0)) {
        throw Error(ErrorKind::Shape, "matmul shape mismatch: " + shape_string(t.shape()) +
                                          " * " + shape_string(s.shape()));
    }
    const std::size_t rows = t.extent(0);
    const std::size_t inner = t.extent(1);
    const std::size_t cols = s.extent(1);
    Tensor out({rows, cols});
    for (std::size_t i = 0; i < rows; ++i) {
        auto dst = out.row(i);
        for (std::size_t k = 0; k < inner; ++k) {
            const double a = t(i, k);
            const auto src = s.row(k);
            for (std::size_t j = 0; j < cols; ++j) {
                dst[j] += a * src[j];
            }
        }
    }
    return out;
}

Tensor cumsum(const Tensor& t) {
    if (t.rank() != 2) {
        throw Error(ErrorKind::Shape,
                    "cumsum expects a 2-D tensor, got " + shape_string(t.shape()));
    }
    Tensor out = t;
    for (std::size_t i = 0; i < out.extent(0); ++i) {
        auto r = out.row(i);
        for (std::size_t j = 1; j < r.size(); ++j) {
            r[j] += r[j - 1];
        }
    }
    return out;
}

namespace detail {

void check_indices(std::span<const std::int64_t> indices, std::size_t bound, const char* op) {
    for (std::size_t n = 0; n < indices.size(); ++n) {
        const std::int64_t v = indices[n];
        if (v < 0 || static_cast<std::size_t>(v) >= bound) {
            throw Error(ErrorKind::Index, std::string(op) + ": index " + std::to_string(v) +
                                              " at flat position " + std::to_string(n) +
                                              " outside [0, " + std::to_string(bound) + ")");
        }
    }
}

}  // namespace detail

namespace {

void check_scatter_shapes(const IndexTensor& index, std::size_t target_rows,
                          std::size_t value_count) {
    if (index.rank() != 2) {
        throw Error(ErrorKind::Shape,
                    "scatter_add index must be 2-D, got " + shape_string(index.shape()));
    }
    if (index.extent(0) != target_rows) {
        throw Error(ErrorKind::Shape, "scatter_add index has " + std::to_string(index.extent(0)) +
                                          " rows, target has " + std::to_string(target_rows));
    }
    if (index.extent(1) != value_count) {
        throw Error(ErrorKind::Shape, "scatter_add index has " + std::to_string(index.extent(1)) +
                                          " columns but " + std::to_string(value_count) +
                                          " values were given");
    }
}

}  // namespace

void scatter_add(Tensor& target, const IndexTensor& index, std::span<const double> values) {
    if (target.rank() != 2) {
        throw Error(ErrorKind::Shape,
                    "scatter_add target must be 2-D, got " + shape_string(target.shape()));
    }
    check_scatter_shapes(index, target.extent(0), values.size());
    detail::check_indices(index.data(), target.extent(1), "scatter_add");

    for (std::size_t i = 0; i < target.extent(0); ++i) {
        auto dst = target.row(i);
        const auto idx = index.row(i);
        for (std::size_t k = 0; k < values.size(); ++k) {
            dst[static_cast<std::size_t>(idx[k])] += values[k];
        }
    }
}

Tensor difference_tensor(const IndexTensor& index, std::span<const double> values,
                         std::size_t columns) {
    if (index.rank() != 2) {
        throw Error(ErrorKind::Shape,
                    "difference_tensor index must be 2-D, got " + shape_string(index.shape()));
    }
    Tensor d({index.extent(0), columns});
    scatter_add(d, index, values);
    return d;
}

}  // namespace wect
