#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace osc {

struct Letter {
    std::uint8_t id = 0;

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

// An ordered set of letters with one printable character each. Letter ids are
// dense: the i-th display character is the letter with id i.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string displays);

    std::size_t size() const { return displays_.size(); }
    char display(Letter a) const;
    std::optional<Letter> find(char c) const;
    Letter at(char c) const;
    bool contains(Letter a) const { return a.id < displays_.size(); }
    bool contains(const Word& w) const;
    const std::string& displays() const { return displays_; }

    Word parse(std::string_view text) const;
    std::string render(const Word& w) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::string displays_;
};

Word concat(const Word& u, const Word& v);

// Length-lexicographic comparison on letter ids.
bool length_lex_less(const Word& u, const Word& v);

// Number of words of length at most n over k letters, (k^{n+1} - 1) / (k - 1).
std::uint64_t count_words_up_to(std::size_t k, std::size_t n);

// Visits every word of A^{<=n} in length-lexicographic order.
void for_each_word(std::size_t k, std::size_t n, const std::function<void(const Word&)>& visit);

// First word of A^{<=n} in length-lexicographic order satisfying pred.
std::optional<Word> find_word(std::size_t k, std::size_t n, const std::function<bool(const Word&)>& pred);

std::vector<Word> words_up_to(std::size_t k, std::size_t n);
std::vector<Word> words_of_length(std::size_t k, std::size_t n);

} // namespace osc
