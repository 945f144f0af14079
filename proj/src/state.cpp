#include "osc/state.hpp"

#include "osc/oracle.hpp"

namespace osc {

std::size_t StateValHash::operator()(const StateVal& s) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ s.tag.id;
    auto mix = [&](std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (auto v : s.ints)
        mix(static_cast<std::uint64_t>(v));
    mix(0xffu);
    for (auto a : s.syms)
        mix(a.id);
    return static_cast<std::size_t>(h);
}

std::string to_string(const StateVal& s, const Alphabet& alphabet) {
    std::string out = s.tag.name;
    if (s.ints.empty() && s.syms.empty())
        return out;
    out += '(';
    bool first = true;
    for (auto v : s.ints) {
        if (!first)
            out += ',';
        out += std::to_string(v);
        first = false;
    }
    if (!s.syms.empty()) {
        out += ';';
        for (auto a : s.syms)
            out += alphabet.contains(a) ? alphabet.display(a) : '?';
    }
    return out + ')';
}

bool LanguageOracle::contains(const Word& w) const {
    if (!alphabet_.contains(w))
        throw input_error("word has a letter outside the alphabet of language " + name_);
    return member_(w);
}

} // namespace osc
