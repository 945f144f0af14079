#include "osc/constructions.hpp"

#include "osc/errors.hpp"
#include "osc/langs.hpp"
#include "osc/qtable.hpp"

#include <map>
#include <unordered_map>

namespace osc::constructions {

namespace {

using F = StateFormula;

constexpr Letter zero{0};
constexpr Letter one{1};
constexpr Letter sep{2};
constexpr Letter pad{3};

constexpr Tag top_tag{1, "T"};

StateVal top() { return StateVal{top_tag, {}, {}}; }

bool is_binary(Letter x) { return x == zero || x == one; }

F any_of(std::vector<F> disjuncts) {
    if (disjuncts.empty())
        return F::falsity();
    if (disjuncts.size() == 1)
        return disjuncts.front();
    return F::any(std::move(disjuncts));
}

void check_range(const char* what, std::size_t v, std::size_t lo, std::size_t hi) {
    if (v < lo || v > hi)
        throw input_error(std::string(what) + " must be in [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "], got " + std::to_string(v));
}

} // namespace

Machine det_count_eq_all3() {
    static constexpr Tag cnt{10, "cnt"};
    Machine m;
    m.name = "counteq3-det";
    m.alphabet = langs::counting_alphabet(3);
    m.init = atom({cnt, {0, 0}, {}});
    m.delta = [](const StateVal& s, Letter x) {
        std::int64_t p = s.ints[0];
        std::int64_t q = s.ints[1];
        switch (x.id) {
        case 0:
            p = checked_add(p, 1);
            q = checked_add(q, 1);
            break;
        case 1:
            p = checked_add(p, -1);
            break;
        default:
            q = checked_add(q, -1);
            break;
        }
        return atom({cnt, {p, q}, {}});
    };
    m.accepting = [](const StateVal& s) { return s.ints[0] == 0 && s.ints[1] == 0; };
    return m;
}

Machine det_count_eq_exists(std::size_t l) {
    check_range("l", l, 1, 6);
    static constexpr Tag vec{20, "vec"};
    Machine m;
    m.name = "counteq-exists-det:" + std::to_string(l);
    m.alphabet = langs::count_exists_alphabet(l);
    m.init = atom({vec, std::vector<std::int64_t>(l, 0), {}});
    m.delta = [](const StateVal& s, Letter x) {
        StateVal next = s;
        if (x.id == 0) {
            for (auto& c : next.ints)
                c = checked_add(c, 1);
        } else {
            auto& c = next.ints[x.id - 1u];
            c = checked_add(c, -1);
        }
        return atom(std::move(next));
    };
    m.accepting = [](const StateVal& s) {
        for (auto c : s.ints)
            if (c == 0)
                return true;
        return false;
    };
    return m;
}

Machine nd_count_eq_exists(std::size_t l) {
    check_range("l", l, 1, 6);
    static constexpr Tag branch{21, "br"};
    Machine m;
    m.name = "counteq-exists-nd:" + std::to_string(l);
    m.alphabet = langs::count_exists_alphabet(l);
    std::vector<F> starts;
    for (std::size_t i = 1; i <= l; ++i)
        starts.push_back(atom({branch, {static_cast<std::int64_t>(i), 0}, {}}));
    m.init = F::any(std::move(starts));
    m.delta = [](const StateVal& s, Letter x) {
        const std::int64_t i = s.ints[0];
        std::int64_t counter = s.ints[1];
        if (x.id == 0)
            counter = checked_add(counter, 1);
        else if (x.id == i)
            counter = checked_add(counter, -1);
        return atom({branch, {i, counter}, {}});
    };
    m.accepting = [](const StateVal& s) { return s.ints[1] == 0; };
    return m;
}

Machine nd_not_eq() {
    // (p, letter or undeclared, before/after separator); syms empty = undeclared.
    static constexpr Tag ne{30, "ne"};
    enum : std::int64_t { before = 0, after = 1 };
    Machine m;
    m.name = "noteq-nd";
    m.alphabet = langs::binary_sep;
    m.init = atom({ne, {0, before}, {}});
    m.delta = [](const StateVal& s, Letter x) -> F {
        if (s.tag == top_tag)
            return is_binary(x) ? atom(top()) : F::falsity();
        const std::int64_t p = s.ints[0];
        const bool declared = !s.syms.empty();
        if (s.ints[1] == before) {
            if (x == sep)
                return atom({ne, {p, after}, s.syms});
            if (declared)
                return atom(s);
            const std::int64_t next = checked_add(p, 1);
            return F::any({atom({ne, {next, before}, {x}}), atom({ne, {next, before}, {}})});
        }
        if (!is_binary(x))
            return F::falsity();
        if (!declared) {
            if (p == 0)
                return atom(top());
            return atom({ne, {p - 1, after}, {}});
        }
        // Both rules apply at p = 1: keep the decrement and the mismatch success.
        std::vector<F> moves;
        if (p != 0)
            moves.push_back(atom({ne, {p - 1, after}, s.syms}));
        if (p == 1 && s.syms[0] != x)
            moves.push_back(atom(top()));
        return any_of(std::move(moves));
    };
    m.accepting = [](const StateVal& s) {
        if (s.tag == top_tag)
            return true;
        return s.ints[1] == after && s.syms.empty() && s.ints[0] != 0;
    };
    return m;
}

Machine nd_not_eq_multi(std::size_t l) {
    check_range("l", l, 1, 4);
    // ints: phase, |u|, counter in current block, current-block verified,
    // then per block (defect kind, position); syms: per block letter of u.
    static constexpr Tag nm{40, "nm"};
    enum : std::int64_t { length_differs = 0, undeclared = 1, mismatch = 2, done = 3 };
    constexpr std::size_t phase = 0, len = 1, counter = 2, verified = 3, blocks = 4;
    const auto count = static_cast<std::int64_t>(l);

    Machine m;
    m.name = "noteq-nd:" + std::to_string(l);
    m.alphabet = langs::binary_sep;

    std::vector<F> starts;
    for (std::size_t mask = 0; mask < (std::size_t{1} << l); ++mask) {
        StateVal s{nm, std::vector<std::int64_t>(blocks + 2 * l, 0), Word(l, zero)};
        for (std::size_t i = 0; i < l; ++i)
            s.ints[blocks + 2 * i] = (mask >> i) & 1u ? undeclared : length_differs;
        starts.push_back(atom(std::move(s)));
    }
    m.init = F::any(std::move(starts));

    // Verdict for the block currently being read.
    auto block_ok = [](const StateVal& s) {
        const auto i = static_cast<std::size_t>(s.ints[phase] - 1);
        const auto kind = s.ints[blocks + 2 * i];
        if (kind == length_differs)
            return s.ints[counter] != s.ints[len];
        return kind == mismatch && s.ints[verified] == 1;
    };

    m.delta = [count, block_ok](const StateVal& s, Letter x) -> F {
        const std::int64_t ph = s.ints[phase];
        if (ph == 0) {
            std::vector<std::size_t> open;
            for (std::size_t i = 0; blocks + 2 * i < s.ints.size(); ++i)
                if (s.ints[blocks + 2 * i] == undeclared)
                    open.push_back(i);
            if (x == sep) {
                if (!open.empty())
                    return F::falsity();
                StateVal next = s;
                next.ints[phase] = 1;
                return atom(std::move(next));
            }
            std::vector<F> moves;
            for (std::size_t subset = 0; subset < (std::size_t{1} << open.size()); ++subset) {
                StateVal next = s;
                next.ints[len] = checked_add(s.ints[len], 1);
                for (std::size_t b = 0; b < open.size(); ++b) {
                    if (!((subset >> b) & 1u))
                        continue;
                    next.ints[blocks + 2 * open[b]] = mismatch;
                    next.ints[blocks + 2 * open[b] + 1] = s.ints[len];
                    next.syms[open[b]] = x;
                }
                moves.push_back(atom(std::move(next)));
            }
            return any_of(std::move(moves));
        }
        const auto i = static_cast<std::size_t>(ph - 1);
        if (x == sep) {
            if (ph == count || !block_ok(s))
                return F::falsity();
            StateVal next = s;
            next.ints[phase] = ph + 1;
            next.ints[counter] = 0;
            next.ints[verified] = 0;
            next.ints[blocks + 2 * i] = done;
            next.ints[blocks + 2 * i + 1] = 0;
            next.syms[i] = zero;
            return atom(std::move(next));
        }
        StateVal next = s;
        if (s.ints[blocks + 2 * i] == mismatch && s.ints[counter] == s.ints[blocks + 2 * i + 1]) {
            if (x == s.syms[i])
                return F::falsity();
            next.ints[verified] = 1;
        }
        // counting past |u| + 1 carries no information
        next.ints[counter] = std::min(s.ints[counter] + 1, s.ints[len] + 1);
        return atom(std::move(next));
    };
    m.accepting = [count, block_ok](const StateVal& s) { return s.ints[phase] == count && block_ok(s); };
    return m;
}

Machine alt_lexicographic() {
    static constexpr Tag lex{50, "lex"};
    static constexpr Tag check_eq{51, "check-eq"};
    static constexpr Tag check_sm{52, "check-sm"};
    enum : std::int64_t { before = 0, after = 1 };
    Machine m;
    m.name = "lex-alt";
    m.alphabet = langs::binary_sep;
    m.init = atom({lex, {0}, {}});
    m.delta = [](const StateVal& s, Letter x) -> F {
        if (s.tag == top_tag)
            return is_binary(x) ? atom(top()) : F::falsity();
        const std::int64_t p = s.ints[0];
        if (s.tag == lex) {
            if (x == sep)
                return atom(top());
            const std::int64_t next = checked_add(p, 1);
            F same = F::all({atom({check_eq, {p, before}, {x}}), atom({lex, {next}, {}})});
            if (x == one)
                return same;
            return F::any({atom({check_sm, {p, before}, {}}), same});
        }
        const bool passed = s.ints[1] == after;
        if (!passed)
            return atom({s.tag, {p, x == sep ? after : before}, s.syms});
        if (!is_binary(x))
            return F::falsity();
        if (p != 0)
            return atom({s.tag, {p - 1, after}, s.syms});
        if (s.tag == check_eq)
            return s.syms[0] == x ? atom(top()) : F::falsity();
        return x == one ? atom(top()) : F::falsity();
    };
    m.accepting = [](const StateVal& s) { return s.tag == top_tag; };
    return m;
}

Machine alt_hierarchy(std::size_t l) {
    check_range("l", l, 2, 3);
    static constexpr Tag count{60, "count"};
    static constexpr Tag copy{61, "copy"};  // (q, j; letter or undeclared)
    static constexpr Tag length{62, "len"}; // (remaining length, separators to skip)
    static constexpr Tag probe{63, "pos"};  // (remaining position, separators to skip; letter)
    const auto exponent = static_cast<std::int64_t>(l);

    // Phase-two move from copy (q, j; sym) on x.
    auto copy_step = [](std::int64_t q, std::int64_t j, const Word& sym, Letter x) -> F {
        if (x == pad)
            return F::falsity();
        if (x == sep) {
            if (sym.empty())
                return atom({length, {q, j - 1}, {}});
            return atom({probe, {q, j - 1}, sym});
        }
        if (!sym.empty())
            return atom({copy, {q, j}, sym});
        return F::all({atom({copy, {checked_add(q, 1), j}, {}}), atom({copy, {q, j}, {x}})});
    };

    Machine m;
    m.name = "hierarchy-alt:" + std::to_string(l);
    m.alphabet = langs::binary_sep_pad;
    m.init = atom({count, {0}, {}});
    m.delta = [exponent, copy_step](const StateVal& s, Letter x) -> F {
        if (s.tag == top_tag)
            return x == pad ? F::falsity() : atom(top());
        if (s.tag == count) {
            const std::int64_t p = s.ints[0];
            if (x == pad)
                return atom({count, {checked_add(p, 1)}, {}});
            std::int64_t bound = 1;
            for (std::int64_t e = 0; e < exponent; ++e)
                bound = static_cast<std::int64_t>(checked_mul(static_cast<std::uint64_t>(bound),
                                                              static_cast<std::uint64_t>(p)));
            std::vector<F> guesses;
            for (std::int64_t j = 1; j <= bound; ++j)
                guesses.push_back(copy_step(0, j, {}, x));
            return any_of(std::move(guesses));
        }
        if (s.tag == copy)
            return copy_step(s.ints[0], s.ints[1], s.syms, x);
        if (x == pad)
            return F::falsity();
        const std::int64_t q = s.ints[0];
        const std::int64_t r = s.ints[1];
        if (r > 0)
            return atom({s.tag, {q, x == sep ? r - 1 : r}, s.syms});
        if (s.tag == length) {
            if (x == sep)
                return q == 0 ? atom(top()) : F::falsity();
            return q == 0 ? F::falsity() : atom({length, {q - 1, 0}, {}});
        }
        if (x == sep)
            return F::falsity();
        if (q > 0)
            return atom({probe, {q - 1, 0}, s.syms});
        return x == s.syms[0] ? atom(top()) : F::falsity();
    };
    m.accepting = [](const StateVal& s) {
        return s.tag == top_tag || (s.tag == length && s.ints[0] == 0 && s.ints[1] == 0);
    };
    return m;
}

Machine det_maj2() {
    static constexpr Tag ctr{70, "ctr"};
    Machine m;
    m.name = "maj2-det";
    m.alphabet = langs::ab;
    m.init = atom({ctr, {0}, {}});
    m.delta = [](const StateVal& s, Letter x) {
        return atom({ctr, {checked_add(s.ints[0], x.id == 0 ? 1 : -1)}, {}});
    };
    m.accepting = [](const StateVal& s) { return s.ints[0] > 0; };
    return m;
}

Machine det_universal(const LanguageOracle& oracle, std::size_t depth_cap) {
    static constexpr Tag word{80, "w"};
    Machine m;
    m.name = "universal:" + oracle.name() + ":" + std::to_string(depth_cap);
    m.alphabet = oracle.alphabet();
    m.init = atom({word, {}, {}});
    m.delta = [depth_cap](const StateVal& s, Letter x) {
        if (s.syms.size() >= depth_cap)
            throw capacity_error("universal machine: depth cap " + std::to_string(depth_cap) + " exceeded");
        StateVal next = s;
        next.syms.push_back(x);
        return atom(std::move(next));
    };
    m.accepting = [oracle](const StateVal& s) { return oracle.contains_unchecked(s.syms); };
    return m;
}

QuotientAutomaton quotient_automaton(const LanguageOracle& oracle, std::size_t order, std::size_t probe_depth,
                                     std::uint64_t budget) {
    static constexpr Tag cls{90, "class"};
    static constexpr Tag horizon{91, "horizon"};
    const std::size_t k = oracle.alphabet().size();
    const std::uint64_t queries = checked_mul(count_words_up_to(k, order), count_words_up_to(k, probe_depth));
    if (queries > budget)
        throw budget_error(queries, budget);

    const auto columns = words_up_to(k, order);
    const auto probes = words_up_to(k, probe_depth);

    struct Table {
        std::vector<Word> reps;
        std::vector<bool> accepting;
        // class x letter -> class, or -1 for the horizon sink
        std::vector<std::int64_t> next;
    };
    auto table = std::make_shared<Table>();
    std::unordered_map<Profile, std::size_t, Profile::Hash> class_of_signature;
    std::map<Word, std::size_t> class_of;
    for (const auto& u : columns) {
        Profile sig(probes.size());
        for (std::size_t i = 0; i < probes.size(); ++i)
            sig.set(i, oracle.contains_unchecked(concat(u, probes[i])));
        auto [it, fresh] = class_of_signature.emplace(std::move(sig), table->reps.size());
        if (fresh) {
            table->reps.push_back(u);
            table->accepting.push_back(oracle.contains_unchecked(u));
        }
        class_of.emplace(u, it->second);
    }
    table->next.assign(table->reps.size() * k, -1);
    for (std::size_t c = 0; c < table->reps.size(); ++c) {
        const Word& rep = table->reps[c];
        if (rep.size() >= order)
            continue;
        for (std::size_t a = 0; a < k; ++a) {
            Word next = rep;
            next.push_back(Letter{static_cast<std::uint8_t>(a)});
            table->next[c * k + a] = static_cast<std::int64_t>(class_of.at(next));
        }
    }

    QuotientAutomaton out;
    out.representatives = table->reps;
    Machine& m = out.machine;
    m.name = "quotient:" + oracle.name() + ":" + std::to_string(order) + ":" + std::to_string(probe_depth);
    m.alphabet = oracle.alphabet();
    m.init = atom({cls, {0}, {}});
    m.delta = [table, k](const StateVal& s, Letter x) {
        if (s.tag == horizon)
            return atom(s);
        const auto target = table->next[static_cast<std::size_t>(s.ints[0]) * k + x.id];
        if (target < 0)
            return atom({horizon, {}, {}});
        return atom({cls, {target}, {}});
    };
    m.accepting = [table](const StateVal& s) {
        return s.tag == cls && table->accepting[static_cast<std::size_t>(s.ints[0])];
    };
    return out;
}

} // namespace osc::constructions
