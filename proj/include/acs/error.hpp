#pragma once

#include <stdexcept>
#include <string>

namespace acs {

/// Invalid arguments: shape/field mismatches, out-of-range parameters.
class InvalidArgument : public std::invalid_argument {
public:
    explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

/// Inputs outside the mathematical domain of an operation (e.g. a
/// non-concave objective handed to the simplex maximizer).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Numerical failure at runtime (singular system with no acceptable
/// fallback, sampler retry exhaustion).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace acs
