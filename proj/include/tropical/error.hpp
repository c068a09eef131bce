#pragma once
#include <stdexcept>
#include <string>

namespace trop {

// Input does not describe a valid object (bad schema, unbalanced vertex, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Input is valid but the requested computation does not apply to it.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace trop
