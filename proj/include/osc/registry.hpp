#pragma once

// Name-addressable languages and machines, as used by the command line.

#include "osc/machine.hpp"
#include "osc/oracle.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace osc {

inline constexpr std::uint64_t default_query_budget = std::uint64_t{1} << 28;

// Thrown for names that are not in a registry; what() lists valid names.
class unknown_name_error : public input_error {
public:
    using input_error::input_error;
};

LanguageOracle make_language(const std::string& name);

struct RegisteredMachine {
    std::string name;
    Machine machine;
    LanguageOracle oracle;
    // Exhaustive agreement depth the machine is registered with.
    std::size_t verify_depth;
};

RegisteredMachine make_machine(const std::string& name, std::uint64_t budget = default_query_budget);

// Fixed-parameter language names, e.g. "counteq:3", "primes".
std::vector<std::string> language_names();
// Name patterns with placeholders, e.g. "counteq:<k>".
std::vector<std::string> language_patterns();

// Concrete machine instances checked by the acceptance suite.
std::vector<std::string> machine_names();
std::vector<std::string> machine_patterns();

std::string registry_listing();

} // namespace osc
