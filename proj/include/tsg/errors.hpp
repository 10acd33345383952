#pragma once

#include <stdexcept>
#include <string>

namespace tsg {

// Bad arguments or malformed configuration (CLI exit code 2).
class argument_error : public std::invalid_argument {
public:
    explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

// Structurally valid request that the scheme cannot honor, e.g. composing a
// permuted Hadamard embedding (CLI exit code 3).
class operation_error : public std::runtime_error {
public:
    explicit operation_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tsg
