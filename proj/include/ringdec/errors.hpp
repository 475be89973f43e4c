#pragma once

#include <stdexcept>

namespace ringdec {

// Vector block is not a valid 0/1 indicator image.
struct NotIntegralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// p(y|0) and p(y|alpha) vanish simultaneously.
struct UndefinedLlrError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ring fails the structural requirements of the PSK construction.
struct PskIncompatibleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Enumeration or instance size exceeds the configured bound.
struct SizeRefusalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ringdec
