#pragma once

#include <stdexcept>
#include <string>

namespace dsw {

/// Raised when caller-supplied data violates a documented precondition
/// (bad file contents, non-finite samples, index out of range, ...).
/// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal consistency check fails. The CLI maps this
/// to exit code 1.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace dsw
