#include "osc/qtable.hpp"

#include "osc/errors.hpp"
#include "osc/langs.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <exception>
#include <thread>
#include <unordered_set>

namespace osc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Keeps profile enumeration of the demos below this many oracle calls when
// using full columns.
constexpr std::uint64_t full_profile_limit = std::uint64_t{1} << 26;

constexpr Letter sep{2};
constexpr Letter pad{3};

std::vector<std::set<Word>> all_subsets(const std::vector<Word>& universe) {
    if (universe.size() > 16)
        throw capacity_error("subset enumeration limited to universes of at most 16 words");
    std::vector<std::set<Word>> out;
    const std::size_t total = std::size_t{1} << universe.size();
    out.reserve(total);
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::set<Word> s;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if ((mask >> i) & 1u)
                s.insert(universe[i]);
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

std::size_t Profile::count() const {
    std::size_t c = 0;
    for (auto b : blocks_)
        c += static_cast<std::size_t>(std::popcount(b));
    return c;
}

std::string Profile::to_string() const {
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i))
            out[i] = '1';
    return out;
}

std::size_t Profile::Hash::operator()(const Profile& p) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull ^ p.size_;
    for (auto b : p.blocks_) {
        h ^= b;
        h *= 0x100000001b3ull;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

LanguageOracle left_quotient(const LanguageOracle& oracle, const Word& u) {
    if (!oracle.alphabet().contains(u))
        throw input_error("left_quotient: word outside the alphabet of " + oracle.name());
    return LanguageOracle("(" + oracle.alphabet().render(u) + ")^-1 " + oracle.name(), oracle.alphabet(),
                          [oracle, u](const Word& w) { return oracle.contains_unchecked(concat(u, w)); });
}

QueryTableReport query_table(const LanguageOracle& oracle, std::size_t order, std::size_t probe_depth,
                             const QueryTableOptions& options) {
    const auto start = Clock::now();
    const std::size_t k = oracle.alphabet().size();
    const std::uint64_t queries = checked_mul(count_words_up_to(k, order), count_words_up_to(k, probe_depth));
    if (queries > options.budget)
        throw budget_error(queries, options.budget);

    const auto columns = words_up_to(k, order);
    const auto rows = words_up_to(k, probe_depth);
    std::vector<Profile> table(rows.size());

    // Workers fill disjoint contiguous row ranges, so the table is the same
    // for every degree of parallelism.
    const std::size_t workers = std::clamp<std::size_t>(options.parallelism, 1, rows.size());
    std::vector<std::exception_ptr> failures(workers);
    auto fill = [&](std::size_t worker) {
        try {
            const std::size_t lo = rows.size() * worker / workers;
            const std::size_t hi = rows.size() * (worker + 1) / workers;
            for (std::size_t r = lo; r < hi; ++r)
                table[r] = profile_over(oracle, columns, rows[r]);
        } catch (...) {
            failures[worker] = std::current_exception();
        }
    };
    if (workers == 1) {
        fill(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < workers; ++t)
            pool.emplace_back(fill, t);
        for (auto& t : pool)
            t.join();
    }
    for (auto& f : failures)
        if (f)
            std::rethrow_exception(f);

    std::unordered_set<Profile, Profile::Hash> distinct_rows(table.begin(), table.end());

    std::unordered_set<Profile, Profile::Hash> distinct_cols;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        Profile col(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            col.set(r, table[r].get(c));
        distinct_cols.insert(std::move(col));
    }

    QueryTableReport report;
    report.language = oracle.name();
    report.order = order;
    report.probe_depth = probe_depth;
    report.distinct_rows = distinct_rows.size();
    report.distinct_cols = distinct_cols.size();
    report.query_count = queries;
    if (options.keep_profiles)
        report.profiles = std::move(table);
    report.elapsed_ms = ms_since(start);
    return report;
}

Profile profile_of(const LanguageOracle& oracle, std::size_t order, const Word& w) {
    return profile_over(oracle, words_up_to(oracle.alphabet().size(), order), w);
}

Profile profile_over(const LanguageOracle& oracle, const std::vector<Word>& columns, const Word& w) {
    Profile p(columns.size());
    Word buffer;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        buffer.assign(columns[i].begin(), columns[i].end());
        buffer.insert(buffer.end(), w.begin(), w.end());
        p.set(i, oracle.contains_unchecked(buffer));
    }
    return p;
}

std::optional<Word> separating_word(const LanguageOracle& oracle, const Word& u, const Word& v,
                                    std::size_t max_len) {
    if (!oracle.alphabet().contains(u) || !oracle.alphabet().contains(v))
        throw input_error("separating_word: word outside the alphabet of " + oracle.name());
    if (u == v)
        return std::nullopt;
    return find_word(oracle.alphabet().size(), max_len, [&](const Word& w) {
        return oracle.contains_unchecked(concat(u, w)) != oracle.contains_unchecked(concat(v, w));
    });
}

Word witness_reverse_membership(const std::set<Word>& words) {
    Word w;
    if (words.empty())
        return Word{sep};
    const std::size_t n = words.begin()->size();
    for (const auto& u : words) {
        if (u.size() != n)
            throw contract_error("witness_reverse_membership: words of mixed lengths");
        w.push_back(sep);
        w.insert(w.end(), u.rbegin(), u.rend());
    }
    return w;
}

HierarchyWitness witness_hierarchy(std::size_t l, std::size_t n, const std::set<Word>& words) {
    if (l == 0 || n == 0 || n % l != 0)
        throw contract_error("witness_hierarchy: n must be a positive multiple of l");
    if (n / l >= 20)
        throw capacity_error("witness_hierarchy: padding 2^(n/l) too long");
    HierarchyWitness out;
    out.padding.assign(std::size_t{1} << (n / l), pad);
    if (words.empty())
        out.suffix.push_back(sep);
    for (const auto& u : words) {
        if (u.size() != n)
            throw contract_error("witness_hierarchy: every word must have length n");
        out.suffix.push_back(sep);
        out.suffix.insert(out.suffix.end(), u.begin(), u.end());
    }
    return out;
}

bool check_alt_bound(const QueryTableReport& report, std::uint64_t s_n) {
    if (s_n >= 64)
        return true;
    return report.distinct_rows <= (std::uint64_t{1} << s_n);
}

WitnessDemoReport demo_expalt(std::size_t n) {
    const auto start = Clock::now();
    const auto oracle = langs::reverse_membership();
    const auto sites = words_of_length(2, n);
    const auto subsets = all_subsets(sites);

    WitnessDemoReport report;
    report.language = oracle.name();
    report.n = n;
    report.order = n;
    const std::uint64_t full = count_words_up_to(oracle.alphabet().size(), n);
    report.full_profiles = full * subsets.size() <= full_profile_limit;
    const auto columns = report.full_profiles ? words_up_to(oracle.alphabet().size(), n) : sites;
    report.columns = columns.size();

    std::unordered_set<Profile, Profile::Hash> seen;
    for (const auto& s : subsets) {
        const Word w = witness_reverse_membership(s);
        for (const auto& u : sites)
            if (oracle.contains_unchecked(concat(u, w)) != (s.count(u) > 0))
                ++report.postcondition_failures;
        seen.insert(profile_over(oracle, columns, w));
        ++report.witnesses;
    }
    report.distinct_profiles = seen.size();
    report.elapsed_ms = ms_since(start);
    return report;
}

WitnessDemoReport demo_hierarchy(std::size_t l, std::size_t n) {
    const auto start = Clock::now();
    const auto oracle = langs::hierarchy(l);
    const auto sites = words_of_length(2, n);
    const auto subsets = all_subsets(sites);

    WitnessDemoReport report;
    report.language = oracle.name();
    report.n = n;
    const HierarchyWitness shape = witness_hierarchy(l, n, {});
    report.order = n + shape.padding.size();

    const std::size_t k = oracle.alphabet().size();
    const std::uint64_t full = count_words_up_to(k, report.order);
    report.full_profiles = full * subsets.size() <= full_profile_limit;
    std::vector<Word> columns;
    if (report.full_profiles) {
        columns = words_up_to(k, report.order);
    } else {
        for (const auto& u : sites)
            columns.push_back(shape.site(u));
    }
    report.columns = columns.size();

    std::unordered_set<Profile, Profile::Hash> seen;
    for (const auto& s : subsets) {
        const HierarchyWitness w = witness_hierarchy(l, n, s);
        for (const auto& u : sites)
            if (oracle.contains_unchecked(concat(w.site(u), w.suffix)) != (s.count(u) > 0))
                ++report.postcondition_failures;
        seen.insert(profile_over(oracle, columns, w.suffix));
        ++report.witnesses;
    }
    report.distinct_profiles = seen.size();
    report.elapsed_ms = ms_since(start);
    return report;
}

} // namespace osc
