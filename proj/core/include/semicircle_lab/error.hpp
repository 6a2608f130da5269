#pragma once

#include <stdexcept>
#include <string>

namespace semicircle_lab {

/// Argument has the wrong length or two operands disagree in dimension.
class SizeError : public std::invalid_argument {
public:
    explicit SizeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Argument lies outside the domain where the operation is defined.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Malformed input: non-finite values, inconsistent specs, invalid strings.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace semicircle_lab
