#pragma once

// Online machines whose transitions are positive boolean formulas over states,
// with acceptance defined by the Prover/Verifier acceptance game.

#include "osc/alphabet.hpp"
#include "osc/oracle.hpp"
#include "osc/state.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace osc {

struct Machine {
    std::string name;
    Alphabet alphabet;
    StateFormula init;
    // Must be total and pure on every reachable state; "no move" is ConstFalse.
    std::function<StateFormula(const StateVal&, Letter)> delta;
    std::function<bool(const StateVal&)> accepting;

    std::string describe(const StateVal& s) const { return to_string(s, alphabet); }
    std::string describe(const StateFormula& f) const;
};

enum class MachineKind { deterministic, nondeterministic, universal, alternating };

const char* to_string(MachineKind k);

// Game value by memoized backward induction over (state, position).
bool accepts(const Machine& m, const Word& w);

// Unmemoized exists/forall game-tree evaluation; refuses words longer than depth_guard.
bool game_tree_value(const Machine& m, const Word& w, std::size_t depth_guard = 8);

// States appearing in some acceptance game on a word of length at most n,
// computed as a forward closure. Sorted.
std::vector<StateVal> reachable_states(const Machine& m, std::size_t n);

struct StateCountCurve {
    std::string machine;
    struct Entry {
        std::size_t n;
        std::uint64_t states;
    };
    std::vector<Entry> entries;
};

StateCountCurve state_count_curve(const Machine& m, std::size_t n_max);

MachineKind classify_machine(const Machine& m, std::size_t depth);

// Exhaustive comparison on A^{<=max_len}, length-lexicographic. Stops after
// `cap` mismatches when given.
std::vector<Word> verify_against_oracle(const Machine& m, const LanguageOracle& oracle,
                                        std::size_t max_len,
                                        std::optional<std::size_t> cap = std::nullopt);

// Unique run of a machine whose formulas are all atomic or constant.
struct DeterministicRun {
    enum class Outcome { state, rejected, accepted } outcome;
    std::optional<StateVal> state;

    bool accepted_by(const Machine& m) const;
};

// Throws contract_error on a formula that is not atomic or constant.
DeterministicRun run_deterministic(const Machine& m, const Word& w);

} // namespace osc
