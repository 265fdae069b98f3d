#include "wect/error.hpp"

namespace wect {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidShape: return "invalid-shape";
        case ErrorKind::Shape: return "shape";
        case ErrorKind::Axis: return "axis";
        case ErrorKind::Index: return "index";
        case ErrorKind::Range: return "range";
        case ErrorKind::Input: return "input";
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Io: return "io";
    }
    return "unknown";
}

}  // namespace wect
