#pragma once

// Membership oracles for the languages studied, defined directly on words.
//
// Letter encodings: `a b c ...` for counting alphabets, `a` plus digits `1..l`
// for a, a_1..a_l, `0 1` binary, `#` for the block separator and `*` for the
// padding letter of the hierarchy languages.

#include "osc/oracle.hpp"

#include <cstddef>

namespace osc::langs {

inline const Alphabet binary{"01"};
inline const Alphabet binary_sep{"01#"};
inline const Alphabet binary_sep_pad{"01#*"};
inline const Alphabet ab{"ab"};

Alphabet counting_alphabet(std::size_t k);
Alphabet count_exists_alphabet(std::size_t l);

// |w|_a1 = ... = |w|_ak over k letters, 2 <= k <= 9.
LanguageOracle count_eq_all(std::size_t k);

// Some i with |w|_a = |w|_{a_i}, 1 <= l <= 8.
LanguageOracle count_eq_exists(std::size_t l);

// u#u_1#...#u_l with u != u_i for all i, 1 <= l <= 8.
LanguageOracle noteq(std::size_t l);

// u#v with u <=lex v.
LanguageOracle lexicographic();

// u#u_1#...#u_k, k >= 1, with u equal to the reversal of some u_j.
LanguageOracle reverse_membership();

// *^p u#u_1#...#u_k with u = u_j for some j <= min(k, p^l), 2 <= l <= 4.
LanguageOracle hierarchy(std::size_t l);

// bin(w) prime, LSB first; words longer than 63 letters raise capacity_error.
LanguageOracle primes();

LanguageOracle maj2();
LanguageOracle sq();

// Even number of a's over {a,b}; a regular reference language.
LanguageOracle parity_a();

} // namespace osc::langs
