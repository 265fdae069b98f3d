#pragma once

#include "wect/error.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace wect {

using Shape = std::vector<std::size_t>;

std::string shape_string(const Shape& shape);

/// Dense row-major tensor of rank 1..3.
///
/// Extents may be zero so that empty cell blocks and empty filter sets have a
/// representation; `zeros` is the only constructor that insists on positive
/// extents.
template <class T>
class BasicTensor {
public:
    using value_type = T;

    BasicTensor() : shape_{0} {}

    explicit BasicTensor(Shape shape)
        : shape_(std::move(shape)), data_(checked_count(shape_), T{}) {}

    BasicTensor(Shape shape, std::vector<T> data)
        : shape_(std::move(shape)), data_(std::move(data)) {
        if (data_.size() != checked_count(shape_)) {
            throw Error(ErrorKind::Shape,
                        "data length " + std::to_string(data_.size()) +
                            " does not match shape " + shape_string(shape_));
        }
    }

    /// 1-D tensor from a literal list.
    static BasicTensor vector(std::initializer_list<T> values) {
        return BasicTensor({values.size()}, std::vector<T>(values));
    }

    /// 2-D tensor from literal rows; all rows must have the same length.
    static BasicTensor matrix(std::initializer_list<std::initializer_list<T>> rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.begin()->size();
        std::vector<T> data;
        data.reserve(r * c);
        for (const auto& row : rows) {
            if (row.size() != c) {
                throw Error(ErrorKind::Shape, "ragged matrix literal");
            }
            data.insert(data.end(), row.begin(), row.end());
        }
        return BasicTensor({r, c}, std::move(data));
    }

    [[nodiscard]] const Shape& shape() const noexcept { return shape_; }
    [[nodiscard]] std::size_t rank() const noexcept { return shape_.size(); }
    [[nodiscard]] std::size_t extent(std::size_t axis) const { return shape_.at(axis); }
    [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }
    [[nodiscard]] bool empty() const noexcept { return data_.empty(); }

    [[nodiscard]] std::span<T> data() noexcept { return data_; }
    [[nodiscard]] std::span<const T> data() const noexcept { return data_; }

    T& operator[](std::size_t flat) noexcept { return data_[flat]; }
    const T& operator[](std::size_t flat) const noexcept { return data_[flat]; }

    T& operator()(std::size_t i) noexcept { return data_[i]; }
    const T& operator()(std::size_t i) const noexcept { return data_[i]; }

    T& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * shape_[1] + j]; }
    const T& operator()(std::size_t i, std::size_t j) const noexcept {
        return data_[i * shape_[1] + j];
    }

    T& operator()(std::size_t i, std::size_t j, std::size_t k) noexcept {
        return data_[(i * shape_[1] + j) * shape_[2] + k];
    }
    const T& operator()(std::size_t i, std::size_t j, std::size_t k) const noexcept {
        return data_[(i * shape_[1] + j) * shape_[2] + k];
    }

    /// Row `i` of a 2-D tensor.
    [[nodiscard]] std::span<const T> row(std::size_t i) const noexcept {
        return std::span<const T>(data_).subspan(i * shape_[1], shape_[1]);
    }
    [[nodiscard]] std::span<T> row(std::size_t i) noexcept {
        return std::span<T>(data_).subspan(i * shape_[1], shape_[1]);
    }

    friend bool operator==(const BasicTensor&, const BasicTensor&) = default;

private:
    static std::size_t checked_count(const Shape& shape) {
        if (shape.empty() || shape.size() > 3) {
            throw Error(ErrorKind::InvalidShape,
                        "tensor rank must be 1, 2 or 3, got " + std::to_string(shape.size()));
        }
        return std::accumulate(shape.begin(), shape.end(), std::size_t{1},
                               std::multiplies<>());
    }

    Shape shape_;
    std::vector<T> data_;
};

/// Value tensors hold binary64, index tensors hold 64-bit signed indices.
using Tensor = BasicTensor<double>;
using IndexTensor = BasicTensor<std::int64_t>;

}  // namespace wect
