#include "osc/langs.hpp"

#include "osc/errors.hpp"
#include "osc/primeslab.hpp"

#include <algorithm>
#include <array>

namespace osc::langs {

namespace {

constexpr Letter zero{0};
constexpr Letter one{1};
constexpr Letter sep{2};
constexpr Letter pad{3};

// Splits at every separator; returns the blocks, so k separators give k+1 blocks.
std::vector<Word> split_blocks(Word::const_iterator begin, Word::const_iterator end) {
    std::vector<Word> blocks(1);
    for (auto it = begin; it != end; ++it) {
        if (*it == sep)
            blocks.emplace_back();
        else
            blocks.back().push_back(*it);
    }
    return blocks;
}

std::size_t count_letter(const Word& w, Letter a) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), a));
}

void check_range(const char* what, std::size_t v, std::size_t lo, std::size_t hi) {
    if (v < lo || v > hi)
        throw input_error(std::string(what) + " must be in [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "], got " + std::to_string(v));
}

} // namespace

Alphabet counting_alphabet(std::size_t k) {
    check_range("alphabet size", k, 2, 9);
    return Alphabet(std::string("abcdefghi").substr(0, k));
}

Alphabet count_exists_alphabet(std::size_t l) {
    check_range("l", l, 1, 8);
    return Alphabet("a" + std::string("12345678").substr(0, l));
}

LanguageOracle count_eq_all(std::size_t k) {
    return LanguageOracle("counteq:" + std::to_string(k), counting_alphabet(k), [k](const Word& w) {
        std::array<std::size_t, 9> counts{};
        for (Letter a : w)
            ++counts[a.id];
        return std::all_of(counts.begin(), counts.begin() + static_cast<long>(k),
                           [&](std::size_t c) { return c == counts[0]; });
    });
}

LanguageOracle count_eq_exists(std::size_t l) {
    return LanguageOracle("counteq-exists:" + std::to_string(l), count_exists_alphabet(l), [l](const Word& w) {
        std::array<std::size_t, 9> counts{};
        for (Letter a : w)
            ++counts[a.id];
        for (std::size_t i = 1; i <= l; ++i)
            if (counts[i] == counts[0])
                return true;
        return false;
    });
}

LanguageOracle noteq(std::size_t l) {
    check_range("l", l, 1, 8);
    return LanguageOracle("noteq:" + std::to_string(l), binary_sep, [l](const Word& w) {
        if (count_letter(w, sep) != l)
            return false;
        auto blocks = split_blocks(w.begin(), w.end());
        for (std::size_t i = 1; i < blocks.size(); ++i)
            if (blocks[i] == blocks[0])
                return false;
        return true;
    });
}

LanguageOracle lexicographic() {
    return LanguageOracle("lexicographic", binary_sep, [](const Word& w) {
        if (count_letter(w, sep) != 1)
            return false;
        auto blocks = split_blocks(w.begin(), w.end());
        const Word& u = blocks[0];
        const Word& v = blocks[1];
        std::size_t i = 0;
        while (i < u.size() && i < v.size() && u[i] == v[i])
            ++i;
        if (i == u.size())
            return true; // u is a prefix of v
        if (i == v.size())
            return false;
        return u[i] == zero && v[i] == one;
    });
}

LanguageOracle reverse_membership() {
    return LanguageOracle("reverse-membership", binary_sep, [](const Word& w) {
        auto blocks = split_blocks(w.begin(), w.end());
        if (blocks.size() < 2)
            return false;
        for (std::size_t j = 1; j < blocks.size(); ++j)
            if (std::equal(blocks[j].rbegin(), blocks[j].rend(), blocks[0].begin(), blocks[0].end()))
                return true;
        return false;
    });
}

LanguageOracle hierarchy(std::size_t l) {
    check_range("l", l, 2, 4);
    return LanguageOracle("hierarchy:" + std::to_string(l), binary_sep_pad, [l](const Word& w) {
        auto body = std::find_if(w.begin(), w.end(), [](Letter a) { return a != pad; });
        if (std::find(body, w.end(), pad) != w.end())
            return false;
        const auto p = static_cast<std::uint64_t>(body - w.begin());
        auto blocks = split_blocks(body, w.end());
        if (blocks.size() < 2)
            return false;
        // p^l saturates well above any block count
        std::uint64_t bound = 1;
        for (std::size_t i = 0; i < l; ++i)
            bound = std::min<std::uint64_t>(bound * p, std::uint64_t{1} << 40);
        const std::uint64_t last = std::min<std::uint64_t>(bound, blocks.size() - 1);
        for (std::uint64_t j = 1; j <= last; ++j)
            if (blocks[j] == blocks[0])
                return true;
        return false;
    });
}

LanguageOracle primes() {
    return LanguageOracle("primes", binary, [](const Word& w) {
        if (w.size() > primes::max_word_length)
            throw capacity_error("primes: word of length " + std::to_string(w.size()) +
                                 " exceeds the 63-letter capacity");
        return primes::is_prime(primes::bin(w));
    });
}

LanguageOracle maj2() {
    return LanguageOracle("maj2", ab, [](const Word& w) {
        const auto a = count_letter(w, Letter{0});
        return a > w.size() - a;
    });
}

LanguageOracle sq() {
    return LanguageOracle("sq", ab, [](const Word& w) {
        if (w.size() % 2 != 0)
            return false;
        const auto half = static_cast<long>(w.size() / 2);
        return std::equal(w.begin(), w.begin() + half, w.begin() + half);
    });
}

LanguageOracle parity_a() {
    return LanguageOracle("parity-a", ab, [](const Word& w) { return count_letter(w, Letter{0}) % 2 == 0; });
}

} // namespace osc::langs
