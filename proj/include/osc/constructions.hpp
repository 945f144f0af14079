#pragma once

#include "osc/machine.hpp"
#include "osc/oracle.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace osc::constructions {

// Counter pair (|w|_a - |w|_b, |w|_a - |w|_c) over {a,b,c}.
Machine det_count_eq_all3();

// Vector (|w|_a - |w|_{a_i})_i, accepting when some coordinate is zero.
Machine det_count_eq_exists(std::size_t l);

// Guesses i up front, then keeps the single counter |w|_a - |w|_{a_i}.
Machine nd_count_eq_exists(std::size_t l);

// Position/letter guessing machine for u#v with u != v.
Machine nd_not_eq();

// Nondeterministic machine for u#u_1#...#u_l with u != u_i for all i.
//
// While reading u the machine guesses, for every block i, a defect: either
// "lengths differ" or "mismatch at position p against letter a". The guesses
// live side by side in one product state and are checked block after block.
Machine nd_not_eq_multi(std::size_t l);

// Alternating machine unravelling u <=lex v letter by letter.
Machine alt_lexicographic();

// Three-phase machine for the hierarchy language: guess j <= p^l while
// reading the padding, spawn one universal copy per letter of u, then check
// block j deterministically.
Machine alt_hierarchy(std::size_t l);

// Single counter |w|_a - |w|_b, accepting when positive.
Machine det_maj2();

// States are the words read so far; delta beyond depth_cap letters throws.
Machine det_universal(const LanguageOracle& oracle, std::size_t depth_cap);

// Deterministic machine over probe-bounded quotient classes of A^{<=order}:
// u ~ v iff L(ux) = L(vx) for every probe x of length at most probe_depth.
// Agrees with L on A^{<=order} whenever probe_depth >= order.
struct QuotientAutomaton {
    Machine machine;
    // Length-lexicographically least member of each class, in class-id order.
    std::vector<Word> representatives;

    std::size_t class_count() const { return representatives.size(); }
};

QuotientAutomaton quotient_automaton(const LanguageOracle& oracle, std::size_t order,
                                     std::size_t probe_depth, std::uint64_t budget);

} // namespace osc::constructions
