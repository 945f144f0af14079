#include "osc/constructions.hpp"
#include "osc/langs.hpp"
#include "osc/machine.hpp"
#include "osc/registry.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <thread>

using namespace osc;
namespace c = osc::constructions;

namespace {

bool acc(const Machine& m, std::string_view w) { return accepts(m, m.alphabet.parse(w)); }

Word random_word(std::mt19937_64& rng, std::size_t k, std::size_t max_len) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
    Word w(len);
    for (auto& x : w)
        x = Letter{static_cast<std::uint8_t>(std::uniform_int_distribution<std::size_t>(0, k - 1)(rng))};
    return w;
}

std::vector<Machine> sample_machines() {
    return {c::det_count_eq_all3(),      c::det_count_eq_exists(2), c::nd_count_eq_exists(2),
            c::nd_not_eq(),              c::nd_not_eq_multi(2),     c::alt_lexicographic(),
            c::alt_hierarchy(2),         c::det_maj2(),             c::det_universal(langs::primes(), 8)};
}

} // namespace

TEST_CASE("accepts on the worked examples") {
    const auto count3 = c::det_count_eq_all3();
    CHECK(acc(count3, "abc"));
    CHECK_FALSE(acc(count3, "aab"));
    CHECK(acc(count3, ""));
    const auto ne = c::nd_not_eq();
    CHECK_FALSE(acc(ne, "0#0"));
    CHECK(acc(ne, "0#1"));
    CHECK(acc(ne, "01#0"));
    CHECK(acc(ne, "0#01"));
}

TEST_CASE("accepts refuses letters outside the alphabet") {
    const auto m = c::det_maj2();
    CHECK_THROWS_AS(accepts(m, Word{Letter{0}, Letter{5}}), input_error);
}

TEST_CASE("game tree value") {
    const auto lex = c::alt_lexicographic();
    CHECK(game_tree_value(lex, lex.alphabet.parse("0#1")));
    for (const auto& m : sample_machines()) {
        const bool base = eval(m.init, [&](const StateVal& q) { return m.accepting(q); });
        CHECK(game_tree_value(m, Word{}) == base);
        CHECK(accepts(m, Word{}) == base);
    }
    CHECK_THROWS_AS(game_tree_value(lex, Word(9, Letter{0})), capacity_error);
}

TEST_CASE("property: game tree agrees with backward induction on random pairs") {
    std::mt19937_64 rng(0x5eed0101);
    const auto machines = sample_machines();
    for (int trial = 0; trial < 100; ++trial) {
        const auto& m = machines[rng() % machines.size()];
        const Word w = random_word(rng, m.alphabet.size(), 6);
        INFO(m.name, " on ", m.alphabet.render(w));
        REQUIRE(game_tree_value(m, w) == accepts(m, w));
    }
}

TEST_CASE("reachable states of the universal machine") {
    const auto m = c::det_universal(langs::primes(), 10);
    CHECK(reachable_states(m, 3).size() == 15);
    for (std::size_t n = 0; n <= 8; ++n)
        CHECK(reachable_states(m, n).size() == (std::size_t{1} << (n + 1)) - 1);
    const auto three = c::det_universal(langs::count_eq_all(3), 6);
    for (std::size_t n = 0; n <= 5; ++n) {
        std::size_t expected = 0, power = 1;
        for (std::size_t i = 0; i <= n; ++i, power *= 3)
            expected += power;
        CHECK(reachable_states(three, n).size() == expected);
    }
}

TEST_CASE("R_0 is the atom set of init") {
    for (const auto& m : sample_machines())
        CHECK(reachable_states(m, 0).size() == atoms(m.init).size());
}

TEST_CASE("counteq3 state count matches directly enumerated difference vectors") {
    const auto m = c::det_count_eq_all3();
    std::set<std::pair<int, int>> seen;
    for (std::size_t n = 0; n <= 7; ++n) {
        for (const auto& w : words_of_length(3, n)) {
            int a = 0, b = 0, cc = 0;
            for (auto x : w)
                (x.id == 0 ? a : x.id == 1 ? b : cc)++;
            seen.insert({a - b, a - cc});
        }
        const auto s = reachable_states(m, n).size();
        CHECK(s == seen.size());
        CHECK(s <= (2 * n + 1) * (2 * n + 1));
    }
}

TEST_CASE("state count curves respect the stated bounds") {
    const auto lex = state_count_curve(c::alt_lexicographic(), 10);
    for (const auto& e : lex.entries)
        if (e.n >= 1)
            CHECK(e.states <= 8 * e.n);
    const auto ne = state_count_curve(c::nd_not_eq(), 10);
    for (const auto& e : ne.entries)
        CHECK(e.states <= 6 * (e.n + 1) + 1);
    const auto maj = state_count_curve(c::det_maj2(), 10);
    for (const auto& e : maj.entries)
        CHECK(e.states == 2 * e.n + 1);
}

TEST_CASE("property: curves are monotone, nested and under the universal bound") {
    for (const auto& m : sample_machines()) {
        INFO(m.name);
        const std::size_t depth = m.alphabet.size() > 3 ? 5 : 7;
        const bool deterministic = classify_machine(m, depth) == MachineKind::deterministic;
        std::vector<StateVal> previous;
        for (std::size_t n = 0; n <= depth; ++n) {
            auto r = reachable_states(m, n);
            CHECK(std::includes(r.begin(), r.end(), previous.begin(), previous.end()));
            if (deterministic)
                CHECK(r.size() <= count_words_up_to(m.alphabet.size(), n));
            previous = std::move(r);
        }
        const auto curve = state_count_curve(m, depth);
        REQUIRE(curve.entries.size() == depth + 1);
        for (std::size_t i = 1; i < curve.entries.size(); ++i)
            CHECK(curve.entries[i - 1].states <= curve.entries[i].states);
    }
}

TEST_CASE("classify_machine") {
    CHECK(classify_machine(c::det_count_eq_all3(), 6) == MachineKind::deterministic);
    CHECK(classify_machine(c::nd_not_eq(), 6) == MachineKind::nondeterministic);
    CHECK(classify_machine(c::alt_lexicographic(), 6) == MachineKind::alternating);
    CHECK(classify_machine(c::nd_count_eq_exists(2), 6) == MachineKind::nondeterministic);
    CHECK(classify_machine(c::det_count_eq_exists(2), 6) == MachineKind::deterministic);
    CHECK(classify_machine(c::alt_hierarchy(2), 6) == MachineKind::alternating);

    Machine conj = c::det_maj2();
    const auto step = conj.delta;
    conj.delta = [step](const StateVal& s, Letter x) { return StateFormula::all({step(s, x), step(s, Letter{0})}); };
    CHECK(classify_machine(conj, 3) == MachineKind::universal);
}

TEST_CASE("verify_against_oracle") {
    CHECK(verify_against_oracle(c::det_count_eq_all3(), langs::count_eq_all(3), 8).empty());
    CHECK(verify_against_oracle(c::alt_lexicographic(), langs::lexicographic(), 9).empty());

    Machine broken = c::det_count_eq_all3();
    const auto good = broken.accepting;
    broken.accepting = [good](const StateVal& s) { return !good(s); };
    const auto all = verify_against_oracle(broken, langs::count_eq_all(3), 8);
    CHECK(all.size() == count_words_up_to(3, 8));
    const auto capped = verify_against_oracle(broken, langs::count_eq_all(3), 8, 5);
    REQUIRE(capped.size() == 5);
    CHECK(capped[0].empty());
    CHECK(std::is_sorted(capped.begin(), capped.end(), length_lex_less));

    CHECK_THROWS_AS(verify_against_oracle(c::det_maj2(), langs::count_eq_all(3), 3), input_error);
}

TEST_CASE("property: deterministic run equals game value") {
    const std::vector<Machine> dets = {c::det_count_eq_all3(), c::det_count_eq_exists(3), c::det_maj2(),
                                       c::det_universal(langs::sq(), 8)};
    for (const auto& m : dets) {
        REQUIRE(classify_machine(m, 6) == MachineKind::deterministic);
        for_each_word(m.alphabet.size(), 6, [&](const Word& w) {
            const auto run = run_deterministic(m, w);
            REQUIRE(run.accepted_by(m) == accepts(m, w));
        });
    }
    CHECK_THROWS_AS(run_deterministic(c::nd_not_eq(), c::nd_not_eq().alphabet.parse("0")), contract_error);
}

TEST_CASE("det_count_eq_all3 run state is the closed-form difference vector") {
    const auto m = c::det_count_eq_all3();
    const auto run = run_deterministic(m, m.alphabet.parse("aabc"));
    REQUIRE(run.state);
    CHECK(run.state->ints == std::vector<std::int64_t>{1, 1});
    for_each_word(3, 8, [&](const Word& w) {
        std::int64_t a = 0, b = 0, cc = 0;
        for (auto x : w)
            (x.id == 0 ? a : x.id == 1 ? b : cc)++;
        const auto r = run_deterministic(m, w);
        REQUIRE(r.state);
        REQUIRE(r.state->ints == std::vector<std::int64_t>{a - b, a - cc});
    });
}

TEST_CASE("delta and accepting are pure") {
    for (const auto& m : sample_machines()) {
        for (const auto& q : reachable_states(m, 3)) {
            CHECK(m.accepting(q) == m.accepting(q));
            for (std::size_t a = 0; a < m.alphabet.size(); ++a) {
                const Letter x{static_cast<std::uint8_t>(a)};
                CHECK(m.delta(q, x) == m.delta(q, x));
            }
        }
    }
}

TEST_CASE("concurrent accepts calls agree with sequential ones") {
    const auto m = c::alt_lexicographic();
    const auto words = words_up_to(3, 7);
    std::vector<char> sequential(words.size());
    for (std::size_t i = 0; i < words.size(); ++i)
        sequential[i] = accepts(m, words[i]);
    std::vector<char> parallel(words.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < 4; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < words.size(); i += 4)
                parallel[i] = accepts(m, words[i]);
        });
    for (auto& t : pool)
        t.join();
    CHECK(parallel == sequential);
}

TEST_CASE("deterministic machines have at least as many states as probe-distinct quotients") {
    const std::vector<std::pair<Machine, LanguageOracle>> pairs = {
        {c::det_count_eq_all3(), langs::count_eq_all(3)},
        {c::det_maj2(), langs::maj2()},
        {c::det_count_eq_exists(2), langs::count_eq_exists(2)}};
    for (const auto& [m, oracle] : pairs)
        for (std::size_t n = 0; n <= 4; ++n) {
            const auto q = c::quotient_automaton(oracle, n, 5, default_query_budget);
            CHECK(reachable_states(m, n).size() >= q.class_count());
        }
}
