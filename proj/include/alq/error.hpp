#pragma once

#include <stdexcept>
#include <string>

namespace alq {

/// Raised when an arithmetic operation is called outside its domain
/// (zero valuation argument, non-prime modulus, non-integral formula value).
class ArithmeticError : public std::domain_error {
public:
    explicit ArithmeticError(const std::string& what) : std::domain_error(what) {}
};

/// Raised by graph operations whose preconditions do not hold.
class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace alq
