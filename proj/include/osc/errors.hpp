#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace osc {

// Precondition of an operation was violated by the caller.
class contract_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Malformed user input: unknown letter, unknown registry name, bad parameter.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A fixed capacity (word length, 64-bit range, depth cap) would be exceeded.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured query budget.
class budget_error : public std::runtime_error {
public:
    budget_error(std::uint64_t required, std::uint64_t budget)
        : std::runtime_error("query budget exceeded: requires " + std::to_string(required) +
                             " membership queries, budget is " + std::to_string(budget)),
          required_(required), budget_(budget) {}

    std::uint64_t required() const { return required_; }
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw capacity_error("64-bit integer overflow in state arithmetic");
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw capacity_error("64-bit integer overflow");
    return r;
}

} // namespace osc
