#pragma once

#include <stdexcept>
#include <string>

namespace qident {

// Caller broke a contract: mismatched series variables, empty window
// intersection, a nonconvergent infinite product, and the like.
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// A precondition on the mathematical input failed (repeated alphabet points,
// odd multiplicity where an even one is required, twist collision, ...).
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// Division by a series that is zero on its whole window, or a scalar
// specialization that lands on a vanishing denominator.
class singular_error : public std::domain_error {
public:
    explicit singular_error(const std::string& what) : std::domain_error(what) {}
};

// A rational-function evaluation hit a pole; the message names the factor.
class pole_error : public std::domain_error {
public:
    explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

// Coefficient access outside the reliable window.  Never silently zero.
class out_of_window_error : public std::out_of_range {
public:
    explicit out_of_window_error(const std::string& what) : std::out_of_range(what) {}
};

// A sum whose summands stop raising the valuation cannot be truncated
// soundly.
class divergence_error : public std::domain_error {
public:
    explicit divergence_error(const std::string& what) : std::domain_error(what) {}
};

// A verification could not be decided at the requested truncation order or
// within the resampling budget.  required_order carries a hint when known.
class inconclusive_error : public std::runtime_error {
public:
    explicit inconclusive_error(const std::string& what, long required_order = -1)
        : std::runtime_error(what), required_order(required_order) {}
    long required_order;
};

} // namespace qident
