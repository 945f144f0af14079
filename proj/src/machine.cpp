#include "osc/machine.hpp"

#include "osc/errors.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace osc {

namespace {

void check_word(const Machine& m, const Word& w) {
    if (!m.alphabet.contains(w))
        throw input_error("word has a letter outside the alphabet of machine " + m.name);
}

class GameSolver {
public:
    GameSolver(const Machine& m, const Word& w) : m_(m), w_(w), memo_(w.size() + 1) {}

    bool value(const StateVal& q, std::size_t pos) {
        auto& table = memo_[pos];
        if (auto it = table.find(q); it != table.end())
            return it->second;
        bool v;
        if (pos == w_.size())
            v = m_.accepting(q);
        else
            v = eval(m_.delta(q, w_[pos]), [&](const StateVal& p) { return value(p, pos + 1); });
        table.emplace(q, v);
        return v;
    }

private:
    const Machine& m_;
    const Word& w_;
    std::vector<std::unordered_map<StateVal, bool, StateValHash>> memo_;
};

bool tree_value(const Machine& m, const Word& w, const StateVal& q, std::size_t pos) {
    if (pos == w.size())
        return m.accepting(q);
    const StateFormula f = m.delta(q, w[pos]);
    return eval(f, [&](const StateVal& p) { return tree_value(m, w, p, pos + 1); });
}

// Breadth-first forward closure; calls on_layer(k, size) for k = 0..n.
template <class OnLayer>
std::unordered_set<StateVal, StateValHash> explore(const Machine& m, std::size_t n, OnLayer&& on_layer) {
    std::unordered_set<StateVal, StateValHash> seen;
    std::vector<StateVal> frontier;
    visit_atoms(m.init, [&](const StateVal& q) {
        if (seen.insert(q).second)
            frontier.push_back(q);
    });
    on_layer(std::size_t{0}, seen.size());
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<StateVal> next;
        for (const auto& q : frontier) {
            for (std::size_t a = 0; a < m.alphabet.size(); ++a) {
                visit_atoms(m.delta(q, Letter{static_cast<std::uint8_t>(a)}), [&](const StateVal& p) {
                    if (seen.insert(p).second)
                        next.push_back(p);
                });
            }
        }
        frontier = std::move(next);
        on_layer(k, seen.size());
    }
    return seen;
}

} // namespace

std::string Machine::describe(const StateFormula& f) const {
    return render(f, [&](const StateVal& s) { return describe(s); });
}

const char* to_string(MachineKind k) {
    switch (k) {
    case MachineKind::deterministic:
        return "deterministic";
    case MachineKind::nondeterministic:
        return "nondeterministic";
    case MachineKind::universal:
        return "universal";
    case MachineKind::alternating:
        return "alternating";
    }
    return "?";
}

bool accepts(const Machine& m, const Word& w) {
    check_word(m, w);
    GameSolver solver(m, w);
    return eval(m.init, [&](const StateVal& q) { return solver.value(q, 0); });
}

bool game_tree_value(const Machine& m, const Word& w, std::size_t depth_guard) {
    check_word(m, w);
    if (w.size() > depth_guard)
        throw capacity_error("game tree evaluation refused: word length " + std::to_string(w.size()) +
                             " exceeds depth guard " + std::to_string(depth_guard));
    return eval(m.init, [&](const StateVal& q) { return tree_value(m, w, q, 0); });
}

std::vector<StateVal> reachable_states(const Machine& m, std::size_t n) {
    auto seen = explore(m, n, [](std::size_t, std::size_t) {});
    std::vector<StateVal> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

StateCountCurve state_count_curve(const Machine& m, std::size_t n_max) {
    StateCountCurve curve{m.name, {}};
    explore(m, n_max, [&](std::size_t k, std::size_t size) {
        curve.entries.push_back({k, static_cast<std::uint64_t>(size)});
    });
    return curve;
}

MachineKind classify_machine(const Machine& m, std::size_t depth) {
    bool disjunctive = false;
    bool conjunctive = false;
    bool general = false;
    auto note = [&](const StateFormula& f) {
        switch (classify(f)) {
        case FormulaShape::disjunctive:
            disjunctive = true;
            break;
        case FormulaShape::conjunctive:
            conjunctive = true;
            break;
        case FormulaShape::general:
            general = true;
            break;
        default:
            break;
        }
    };
    note(m.init);
    for (const auto& q : reachable_states(m, depth))
        for (std::size_t a = 0; a < m.alphabet.size(); ++a)
            note(m.delta(q, Letter{static_cast<std::uint8_t>(a)}));
    if (general || (disjunctive && conjunctive))
        return MachineKind::alternating;
    if (disjunctive)
        return MachineKind::nondeterministic;
    if (conjunctive)
        return MachineKind::universal;
    return MachineKind::deterministic;
}

std::vector<Word> verify_against_oracle(const Machine& m, const LanguageOracle& oracle, std::size_t max_len,
                                        std::optional<std::size_t> cap) {
    if (!(m.alphabet == oracle.alphabet()))
        throw input_error("alphabet mismatch: machine " + m.name + " is over {" + m.alphabet.displays() +
                          "}, language " + oracle.name() + " over {" + oracle.alphabet().displays() + "}");
    std::vector<Word> mismatches;
    bool full = false;
    for_each_word(m.alphabet.size(), max_len, [&](const Word& w) {
        if (full)
            return;
        if (accepts(m, w) != oracle.contains_unchecked(w)) {
            mismatches.push_back(w);
            if (cap && mismatches.size() >= *cap)
                full = true;
        }
    });
    return mismatches;
}

bool DeterministicRun::accepted_by(const Machine& m) const {
    switch (outcome) {
    case Outcome::accepted:
        return true;
    case Outcome::rejected:
        return false;
    case Outcome::state:
        return m.accepting(*state);
    }
    return false;
}

DeterministicRun run_deterministic(const Machine& m, const Word& w) {
    check_word(m, w);
    using K = StateFormula::Kind;
    auto step = [](const StateFormula& f) -> DeterministicRun {
        switch (f.kind()) {
        case K::constant_true:
            return {DeterministicRun::Outcome::accepted, std::nullopt};
        case K::constant_false:
            return {DeterministicRun::Outcome::rejected, std::nullopt};
        case K::atom:
            return {DeterministicRun::Outcome::state, f.atom_value()};
        default:
            throw contract_error("run_deterministic on a non-deterministic formula");
        }
    };
    DeterministicRun run = step(m.init);
    for (Letter a : w) {
        if (run.outcome != DeterministicRun::Outcome::state)
            break;
        run = step(m.delta(*run.state, a));
    }
    return run;
}

} // namespace osc
