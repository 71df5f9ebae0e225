#pragma once

#include <stdexcept>
#include <string>

namespace blax {

struct MalformedInput : std::runtime_error {
    explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedGrowth : std::runtime_error {
    explicit UnsupportedGrowth(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

struct NotALieBasis : std::runtime_error {
    explicit NotALieBasis(const std::string& what) : std::runtime_error(what) {}
};

struct Unrepresentable : std::runtime_error {
    explicit Unrepresentable(const std::string& what) : std::runtime_error(what) {}
};

struct MissingRule : std::runtime_error {
    explicit MissingRule(const std::string& what) : std::runtime_error(what) {}
};

struct SyntaxError : std::runtime_error {
    SyntaxError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          pos(position) {}
    std::size_t pos;
};

}  // namespace blax
