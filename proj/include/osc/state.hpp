#pragma once

#include "osc/alphabet.hpp"
#include "osc/pbf.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace osc {

// Symbolic discriminant of a machine state. Only the id takes part in
// comparisons; the name is for display.
struct Tag {
    std::uint16_t id = 0;
    const char* name = "";

    friend bool operator==(const Tag& a, const Tag& b) { return a.id == b.id; }
    friend auto operator<=>(const Tag& a, const Tag& b) { return a.id <=> b.id; }
};

struct StateVal {
    Tag tag;
    std::vector<std::int64_t> ints;
    Word syms;

    friend bool operator==(const StateVal&, const StateVal&) = default;
    friend auto operator<=>(const StateVal&, const StateVal&) = default;
};

struct StateValHash {
    std::size_t operator()(const StateVal& s) const noexcept;
};

// tag(i1,...,ik;s1...sj) with letters rendered through the alphabet.
std::string to_string(const StateVal& s, const Alphabet& alphabet);

using StateFormula = Pbf<StateVal>;

inline StateFormula atom(StateVal s) { return StateFormula::atom(std::move(s)); }

} // namespace osc
