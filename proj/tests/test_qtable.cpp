#include "osc/constructions.hpp"
#include "osc/langs.hpp"
#include "osc/primeslab.hpp"
#include "osc/qtable.hpp"
#include "osc/registry.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace osc;

namespace {

Word bw(std::string_view s) { return langs::binary.parse(s); }
Word sw(std::string_view s) { return langs::binary_sep_pad.parse(s); }

// Direct table: distinct rows and columns via std::set of strings.
std::pair<std::size_t, std::size_t> brute_table(const LanguageOracle& l, std::size_t n, std::size_t m) {
    const auto cols = words_up_to(l.alphabet().size(), n);
    const auto rows = words_up_to(l.alphabet().size(), m);
    std::vector<std::string> row_text(rows.size()), col_text(cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const char bit = l(concat(cols[c], rows[r])) ? '1' : '0';
            row_text[r] += bit;
            col_text[c] += bit;
        }
    return {std::set<std::string>(row_text.begin(), row_text.end()).size(),
            std::set<std::string>(col_text.begin(), col_text.end()).size()};
}

} // namespace

TEST_CASE("left quotients") {
    const auto l = langs::lexicographic();
    const auto same = left_quotient(l, Word{});
    for_each_word(3, 8, [&](const Word& w) { REQUIRE(same(w) == l(w)); });
    CHECK(left_quotient(langs::primes(), bw("1"))(bw("1")));
    const auto maj = langs::maj2();
    CHECK(left_quotient(maj, maj.alphabet().parse("aa"))(maj.alphabet().parse("b")));
    CHECK_THROWS_AS(left_quotient(maj, Word{Letter{4}}), input_error);
}

TEST_CASE("query table matches a brute-force table") {
    for (const auto& name : {"maj2", "sq", "primes", "lexicographic", "noteq", "counteq:3"}) {
        const auto l = make_language(name);
        for (std::size_t n = 0; n <= 3; ++n)
            for (std::size_t m = 0; m <= 4; ++m) {
                INFO(name, " n=", n, " m=", m);
                const auto report = query_table(l, n, m);
                const auto [rows, cols] = brute_table(l, n, m);
                CHECK(report.distinct_rows == rows);
                CHECK(report.distinct_cols == cols);
                CHECK(report.query_count == count_words_up_to(l.alphabet().size(), n) *
                                                count_words_up_to(l.alphabet().size(), m));
                CHECK(report.distinct_rows >= 1);
                CHECK(report.distinct_cols >= 1);
                CHECK(report.distinct_rows <= count_words_up_to(l.alphabet().size(), m));
                CHECK(report.distinct_cols <= count_words_up_to(l.alphabet().size(), n));
            }
    }
}

TEST_CASE("regular oracle has a constant table size") {
    const auto l = langs::parity_a();
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t m = 1; m <= 6; ++m) {
            const auto r = query_table(l, n, m);
            CHECK(r.distinct_rows == 2);
            CHECK(r.distinct_cols == 2);
        }
}

TEST_CASE("property: monotone in order and probe depth") {
    for (const auto& name : {"maj2", "primes", "reverse-membership", "sq"}) {
        const auto l = make_language(name);
        for (std::size_t n = 0; n <= 3; ++n)
            for (std::size_t m = 0; m <= 5; ++m) {
                const auto base = query_table(l, n, m);
                const auto deeper = query_table(l, n, m + 1);
                const auto wider = query_table(l, n + 1, m);
                CHECK(base.distinct_rows <= deeper.distinct_rows);
                CHECK(base.distinct_rows <= wider.distinct_rows);
                CHECK(base.distinct_cols <= deeper.distinct_cols);
                CHECK(base.distinct_cols <= wider.distinct_cols);
            }
    }
}

TEST_CASE("reverse membership table has at least 2^(2^n) rows") {
    const auto r = query_table(langs::reverse_membership(), 2, 9);
    CHECK(r.distinct_rows >= 16);
    CHECK(r.order == 2);
    CHECK(r.probe_depth == 9);
}

TEST_CASE("parallel tables are identical") {
    for (const auto& name : {"reverse-membership", "primes", "hierarchy:2"}) {
        const auto l = make_language(name);
        QueryTableOptions one;
        one.keep_profiles = true;
        QueryTableOptions many = one;
        many.parallelism = 5;
        const auto a = query_table(l, 3, 6, one);
        const auto b = query_table(l, 3, 6, many);
        CHECK(a.distinct_rows == b.distinct_rows);
        CHECK(a.distinct_cols == b.distinct_cols);
        REQUIRE(a.profiles);
        REQUIRE(b.profiles);
        CHECK(*a.profiles == *b.profiles);
    }
}

TEST_CASE("budget refusal reports the required budget") {
    QueryTableOptions tight;
    tight.budget = 100;
    try {
        query_table(langs::primes(), 5, 5, tight);
        FAIL("expected budget_error");
    } catch (const budget_error& e) {
        CHECK(e.required() == 63u * 63u);
        CHECK(e.budget() == 100u);
    }
}

TEST_CASE("profiles") {
    const auto l = langs::maj2();
    for_each_word(2, 5, [&](const Word& w) {
        const auto p = profile_of(l, 0, w);
        REQUIRE(p.size() == 1);
        REQUIRE(p.get(0) == l(w));
    });
    const auto p = profile_of(l, 3, l.alphabet().parse("a"));
    CHECK(p.size() == 15);
    CHECK(p.to_string().size() == 15);
    CHECK(p.to_string()[0] == '1');
}

TEST_CASE("column duplication does not change distinct row counts") {
    for (const auto& name : {"sq", "primes", "lexicographic"}) {
        const auto l = make_language(name);
        const std::size_t n = 3, m = 5;
        const auto cols = words_up_to(l.alphabet().size(), n);
        const auto rows = words_up_to(l.alphabet().size(), m);
        // One representative per distinct column.
        std::map<std::string, Word> reps;
        for (const auto& u : cols) {
            std::string key;
            for (const auto& w : rows)
                key += l(concat(u, w)) ? '1' : '0';
            reps.emplace(key, u);
        }
        std::vector<Word> dedup;
        for (const auto& [key, u] : reps)
            dedup.push_back(u);
        std::set<Profile> full, reduced;
        for (const auto& w : rows) {
            full.insert(profile_over(l, cols, w));
            reduced.insert(profile_over(l, dedup, w));
        }
        CHECK(full.size() == reduced.size());
        CHECK(full.size() == query_table(l, n, m).distinct_rows);
    }
}

TEST_CASE("separating_word") {
    const auto maj = langs::maj2();
    CHECK_FALSE(separating_word(maj, maj.alphabet().parse("ab"), maj.alphabet().parse("ab"), 5));
    const auto e = separating_word(maj, maj.alphabet().parse("a"), maj.alphabet().parse("b"), 3);
    REQUIRE(e);
    CHECK(e->empty());
    const auto w = separating_word(maj, maj.alphabet().parse("ab"), maj.alphabet().parse("ba"), 6);
    CHECK_FALSE(w);
    const auto x = separating_word(maj, maj.alphabet().parse("aa"), maj.alphabet().parse("a"), 6);
    REQUIRE(x);
    CHECK(maj.alphabet().render(*x) == "b");
}

TEST_CASE("separating_word is least in length-lex order") {
    const auto l = langs::primes();
    for (std::uint64_t a = 1; a < 64; a += 2)
        for (std::uint64_t b = a + 2; b < 64; b += 2) {
            const Word u = primes::encode(a, 6), v = primes::encode(b, 6);
            const auto w = separating_word(l, u, v, 8);
            REQUIRE(w);
            REQUIRE(l(concat(u, *w)) != l(concat(v, *w)));
            for_each_word(2, w->size(), [&](const Word& y) {
                if (length_lex_less(y, *w))
                    REQUIRE(l(concat(u, y)) == l(concat(v, y)));
            });
        }
}

TEST_CASE("primes quotients are separated at length 8") {
    const auto l = langs::primes();
    const auto words = words_of_length(2, 8);
    std::vector<Word> odd;
    for (const auto& u : words)
        if (u[0].id == 1)
            odd.push_back(u);
    for (std::size_t i = 0; i < odd.size(); ++i)
        for (std::size_t j = i + 1; j < odd.size(); ++j)
            REQUIRE(separating_word(l, odd[i], odd[j], 12));
}

TEST_CASE("reverse membership witness") {
    CHECK(langs::binary_sep.render(witness_reverse_membership({bw("00"), bw("11")})) == "#00#11");
    const Word w = witness_reverse_membership({bw("01")});
    CHECK(langs::binary_sep.render(w) == "#10");
    const auto l = langs::reverse_membership();
    CHECK(l(concat(bw("01"), w)));
    CHECK_FALSE(l(concat(bw("10"), w)));
    CHECK(langs::binary_sep.render(witness_reverse_membership({})) == "#");
    CHECK_THROWS_AS(witness_reverse_membership({bw("0"), bw("11")}), contract_error);

    std::set<Profile> seen;
    const auto sites = words_of_length(2, 2);
    for (unsigned mask = 0; mask < 16; ++mask) {
        std::set<Word> s;
        for (unsigned i = 0; i < 4; ++i)
            if ((mask >> i) & 1u)
                s.insert(sites[i]);
        const Word x = witness_reverse_membership(s);
        for (const auto& u : sites)
            CHECK(l(concat(u, x)) == (s.count(u) > 0));
        seen.insert(profile_of(l, 2, x));
    }
    CHECK(seen.size() == 16);
}

TEST_CASE("hierarchy witness") {
    const auto l = langs::hierarchy(2);
    const auto w = witness_hierarchy(2, 2, {bw("01")});
    CHECK(langs::binary_sep_pad.render(w.padding) == "**");
    CHECK(langs::binary_sep_pad.render(w.suffix) == "#01");
    CHECK(l(concat(w.site(bw("01")), w.suffix)));
    CHECK_FALSE(l(concat(w.site(bw("10")), w.suffix)));
    CHECK(l(sw("**01#01")));

    const auto empty = witness_hierarchy(2, 2, {});
    CHECK(langs::binary_sep_pad.render(empty.suffix) == "#");
    for (const auto& u : words_of_length(2, 2))
        CHECK_FALSE(l(concat(empty.site(u), empty.suffix)));

    CHECK_THROWS_AS(witness_hierarchy(2, 3, {}), contract_error);
    CHECK_THROWS_AS(witness_hierarchy(2, 2, {bw("011")}), contract_error);

    std::set<Profile> seen;
    const auto sites = words_of_length(2, 2);
    for (unsigned mask = 0; mask < 16; ++mask) {
        std::set<Word> s;
        for (unsigned i = 0; i < 4; ++i)
            if ((mask >> i) & 1u)
                s.insert(sites[i]);
        seen.insert(profile_of(l, 4, witness_hierarchy(2, 2, s).suffix));
    }
    CHECK(seen.size() == 16);
}

TEST_CASE("witness demos") {
    const auto two = demo_expalt(2);
    CHECK(two.witnesses == 16);
    CHECK(two.distinct_profiles == 16);
    CHECK(two.postcondition_failures == 0);
    CHECK(two.full_profiles);
    const auto three = demo_expalt(3);
    CHECK(three.distinct_profiles == 256);
    CHECK(three.postcondition_failures == 0);

    const auto h = demo_hierarchy(2, 2);
    CHECK(h.order == 4);
    CHECK(h.distinct_profiles == 16);
    CHECK(h.postcondition_failures == 0);
    CHECK(h.full_profiles);
}

TEST_CASE("alternation bound check") {
    const auto lex = constructions::alt_lexicographic();
    const auto s4 = reachable_states(lex, 4).size();
    CHECK(check_alt_bound(query_table(langs::lexicographic(), 4, 8), s4));
    const auto par = constructions::quotient_automaton(langs::parity_a(), 6, 6, default_query_budget);
    CHECK(check_alt_bound(query_table(langs::parity_a(), 6, 6), reachable_states(par.machine, 6).size()));

    QueryTableReport fake;
    fake.distinct_rows = 9;
    CHECK_FALSE(check_alt_bound(fake, 3));
    CHECK(check_alt_bound(fake, 4));
    CHECK(check_alt_bound(fake, 64));
}
