#pragma once

#include "osc/alphabet.hpp"

#include <functional>
#include <string>

namespace osc {

// Ground-truth membership predicate for a language over a fixed alphabet.
class LanguageOracle {
public:
    using Predicate = std::function<bool(const Word&)>;

    LanguageOracle(std::string name, Alphabet alphabet, Predicate member)
        : name_(std::move(name)), alphabet_(std::move(alphabet)), member_(std::move(member)) {}

    const std::string& name() const { return name_; }
    const Alphabet& alphabet() const { return alphabet_; }

    // Throws input_error when w has a letter outside the alphabet.
    bool contains(const Word& w) const;
    bool operator()(const Word& w) const { return contains(w); }

    // Skips the alphabet check; for hot loops over words built from the alphabet.
    bool contains_unchecked(const Word& w) const { return member_(w); }

private:
    std::string name_;
    Alphabet alphabet_;
    Predicate member_;
};

} // namespace osc
