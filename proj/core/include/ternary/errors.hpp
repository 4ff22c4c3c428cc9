#ifndef TERNARY_ERRORS_HPP
#define TERNARY_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ternary {

struct NotIrreducibleError : std::runtime_error {
    explicit NotIrreducibleError(const std::string& what) : std::runtime_error(what) {}
};

struct NotPrimitiveError : std::runtime_error {
    NotPrimitiveError(const std::string& what, std::uint64_t order_)
        : std::runtime_error(what), order(order_) {}
    std::uint64_t order;  // actual multiplicative order of x mod the offending modulus
};

/// Exhaustive iteration requested above the size cap without the override flag.
struct CapExceededError : std::runtime_error {
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// An exact search would exceed its configured work budget.
struct BudgetExceededError : std::runtime_error {
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ternary

#endif
