#include "osc/alphabet.hpp"

#include "osc/errors.hpp"

#include <algorithm>

namespace osc {

Alphabet::Alphabet(std::string displays) : displays_(std::move(displays)) {
    if (displays_.empty() || displays_.size() > 255)
        throw contract_error("alphabet size must be in [1, 255]");
    std::string sorted = displays_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw contract_error("alphabet display characters must be unique");
}

char Alphabet::display(Letter a) const {
    if (!contains(a))
        throw input_error("letter id " + std::to_string(a.id) + " outside alphabet {" + displays_ + "}");
    return displays_[a.id];
}

std::optional<Letter> Alphabet::find(char c) const {
    auto pos = displays_.find(c);
    if (pos == std::string::npos)
        return std::nullopt;
    return Letter{static_cast<std::uint8_t>(pos)};
}

Letter Alphabet::at(char c) const {
    if (auto a = find(c))
        return *a;
    throw input_error(std::string("letter '") + c + "' outside alphabet {" + displays_ + "}");
}

bool Alphabet::contains(const Word& w) const {
    return std::all_of(w.begin(), w.end(), [&](Letter a) { return contains(a); });
}

Word Alphabet::parse(std::string_view text) const {
    Word w;
    w.reserve(text.size());
    for (char c : text)
        w.push_back(at(c));
    return w;
}

std::string Alphabet::render(const Word& w) const {
    std::string out;
    out.reserve(w.size());
    for (Letter a : w)
        out.push_back(display(a));
    return out;
}

Word concat(const Word& u, const Word& v) {
    Word out;
    out.reserve(u.size() + v.size());
    out.insert(out.end(), u.begin(), u.end());
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

bool length_lex_less(const Word& u, const Word& v) {
    if (u.size() != v.size())
        return u.size() < v.size();
    return u < v;
}

std::uint64_t count_words_up_to(std::size_t k, std::size_t n) {
    std::uint64_t total = 0;
    std::uint64_t layer = 1;
    for (std::size_t len = 0; len <= n; ++len) {
        total += layer;
        if (total < layer)
            throw capacity_error("word count overflows 64 bits");
        if (len < n)
            layer = checked_mul(layer, k);
    }
    return total;
}

namespace {

// Visits A^{<=n} in length-lex order until visit returns true.
template <class Visit>
bool enumerate(std::size_t k, std::size_t n, Visit&& visit) {
    Word w;
    for (std::size_t len = 0; len <= n; ++len) {
        w.assign(len, Letter{0});
        while (true) {
            if (visit(w))
                return true;
            // odometer increment, last letter fastest
            std::size_t i = len;
            while (i > 0 && w[i - 1].id + 1u == k) {
                w[i - 1].id = 0;
                --i;
            }
            if (i == 0)
                break;
            ++w[i - 1].id;
        }
    }
    return false;
}

} // namespace

void for_each_word(std::size_t k, std::size_t n, const std::function<void(const Word&)>& visit) {
    enumerate(k, n, [&](const Word& w) {
        visit(w);
        return false;
    });
}

std::optional<Word> find_word(std::size_t k, std::size_t n, const std::function<bool(const Word&)>& pred) {
    std::optional<Word> found;
    enumerate(k, n, [&](const Word& w) {
        if (!pred(w))
            return false;
        found = w;
        return true;
    });
    return found;
}

std::vector<Word> words_up_to(std::size_t k, std::size_t n) {
    std::vector<Word> out;
    out.reserve(count_words_up_to(k, n));
    for_each_word(k, n, [&](const Word& w) { out.push_back(w); });
    return out;
}

std::vector<Word> words_of_length(std::size_t k, std::size_t n) {
    std::vector<Word> out;
    for_each_word(k, n, [&](const Word& w) {
        if (w.size() == n)
            out.push_back(w);
    });
    return out;
}

} // namespace osc
