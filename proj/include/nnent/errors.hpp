#pragma once

#include <stdexcept>
#include <string>

namespace nnent {

// Parameter or input outside the documented domain of an operation.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// File parsing, missing file, malformed header, write failure.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nnent
