#pragma once

#include "wect/tensor.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>

// Dense kernels used by the vectorized WECF pipeline: zeros, element-wise
// maps, matmul, cumsum, reduce-max, advanced indexing and scatter-add.
namespace wect {

/// All-zero tensor; every extent must be >= 1.
Tensor zeros(const Shape& shape);

/// Element-wise post-composition. The result element type follows `f`.
template <class T, class F>
auto map_elementwise(const BasicTensor<T>& t, F&& f)
    -> BasicTensor<std::decay_t<std::invoke_result_t<F&, const T&>>> {
    using U = std::decay_t<std::invoke_result_t<F&, const T&>>;
    std::vector<U> out(t.size());
    std::transform(t.data().begin(), t.data().end(), out.begin(), f);
    return BasicTensor<U>(t.shape(), std::move(out));
}

/// (m0 x m1) * (m1 x m2).
Tensor matmul(const Tensor& t, const Tensor& s);

/// Running sum along the second axis of a 2-D tensor.
Tensor cumsum(const Tensor& t);

/// Maximum over `axis`; that axis is dropped from the result.
template <class T>
BasicTensor<T> rmax(const BasicTensor<T>& t, std::size_t axis) {
    const Shape& shape = t.shape();
    if (axis >= shape.size()) {
        throw Error(ErrorKind::Axis, "rmax axis " + std::to_string(axis) +
                                         " out of range for shape " + shape_string(shape));
    }
    if (shape[axis] == 0) {
        throw Error(ErrorKind::Axis, "rmax over an empty axis");
    }
    if (shape.size() == 1) {
        throw Error(ErrorKind::Axis, "rmax would produce a rank-0 tensor");
    }
    std::size_t outer = 1;
    std::size_t inner = 1;
    for (std::size_t a = 0; a < axis; ++a) outer *= shape[a];
    for (std::size_t a = axis + 1; a < shape.size(); ++a) inner *= shape[a];
    const std::size_t len = shape[axis];

    Shape out_shape;
    for (std::size_t a = 0; a < shape.size(); ++a) {
        if (a != axis) out_shape.push_back(shape[a]);
    }
    BasicTensor<T> out(out_shape);
    const auto src = t.data();
    auto dst = out.data();
    for (std::size_t o = 0; o < outer; ++o) {
        const T* block = src.data() + o * len * inner;
        T* target = dst.data() + o * inner;
        std::copy(block, block + inner, target);
        for (std::size_t j = 1; j < len; ++j) {
            const T* slice = block + j * inner;
            for (std::size_t k = 0; k < inner; ++k) {
                target[k] = std::max(target[k], slice[k]);
            }
        }
    }
    return out;
}

namespace detail {
void check_indices(std::span<const std::int64_t> indices, std::size_t bound,
                   const char* op);
}  // namespace detail

/// Gather rows: out[i, j, k] = t[index[i, j], k]. Indices are bounds-checked
/// against t's first extent before anything is written.
template <class T>
BasicTensor<T> advanced_index(const BasicTensor<T>& t, const IndexTensor& index) {
    if (t.rank() != 2 || index.rank() != 2) {
        throw Error(ErrorKind::Shape, "advanced_index expects a 2-D source and a 2-D index, got " +
                                          shape_string(t.shape()) + " and " +
                                          shape_string(index.shape()));
    }
    detail::check_indices(index.data(), t.extent(0), "advanced_index");
    const std::size_t cols = t.extent(1);
    BasicTensor<T> out({index.extent(0), index.extent(1), cols});
    auto dst = out.data();
    const auto src = t.data();
    const auto idx = index.data();
    for (std::size_t n = 0; n < idx.size(); ++n) {
        const auto first = src.begin() + static_cast<std::ptrdiff_t>(idx[n] * cols);
        std::copy(first, first + static_cast<std::ptrdiff_t>(cols),
                  dst.begin() + static_cast<std::ptrdiff_t>(n * cols));
    }
    return out;
}

/// target[i, index[i, k]] += values[k], rows in order, k ascending within a row.
/// Throws before mutating anything if an index is out of range.
void scatter_add(Tensor& target, const IndexTensor& index, std::span<const double> values);
inline void scatter_add(Tensor& target, const IndexTensor& index, const Tensor& values) {
    if (values.rank() != 1) {
        throw Error(ErrorKind::Shape, "scatter_add values must be 1-D, got " +
                                          shape_string(values.shape()));
    }
    scatter_add(target, index, values.data());
}

/// Materializes the difference tensor that scatter_add would add. Debug aid.
Tensor difference_tensor(const IndexTensor& index, std::span<const double> values,
                         std::size_t columns);

template <class T>
BasicTensor<T> transpose(const BasicTensor<T>& t) {
    if (t.rank() != 2) {
        throw Error(ErrorKind::Shape, "transpose expects a 2-D tensor, got " +
                                          shape_string(t.shape()));
    }
    const std::size_t r = t.extent(0);
    const std::size_t c = t.extent(1);
    BasicTensor<T> out({c, r});
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            out(j, i) = t(i, j);
        }
    }
    return out;
}

}  // namespace wect
