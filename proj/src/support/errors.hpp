#pragma once

#include <stdexcept>
#include <string>

namespace legv {

// Bad mathematical input (singular parameter, unsupported argument, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A validated computation could not reach the requested accuracy.
struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// A certificate or fixture failed an exact check.
struct CertificateError : std::runtime_error {
    explicit CertificateError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace legv
