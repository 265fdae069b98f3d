#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wect {

/// Coarse failure category; the CLI maps each one to an exit status.
enum class ErrorKind {
    InvalidShape,
    Shape,
    Axis,
    Index,
    Range,
    Input,
    Parse,
    Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace wect
