#pragma once

// Left quotients and the query-table lower-bound method.
//
// The query table of order n has one column per left quotient u^{-1}L with
// |u| <= n and one row per word w; the cell is L(uw). Rows are enumerated up
// to a probe depth m, so every distinct-row count reported here is a lower
// bound on the true table size that can only grow with m.

#include "osc/alphabet.hpp"
#include "osc/oracle.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace osc {

LanguageOracle left_quotient(const LanguageOracle& oracle, const Word& u);

// Packed boolean vector, bit i belongs to the i-th column in length-lex order.
class Profile {
public:
    Profile() = default;
    explicit Profile(std::size_t size) : size_(size), blocks_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (blocks_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t bit = std::uint64_t{1} << (i % 64);
        if (v)
            blocks_[i / 64] |= bit;
        else
            blocks_[i / 64] &= ~bit;
    }
    std::size_t count() const;
    std::string to_string() const;

    friend bool operator==(const Profile&, const Profile&) = default;
    friend auto operator<=>(const Profile&, const Profile&) = default;

    struct Hash {
        std::size_t operator()(const Profile& p) const noexcept;
    };

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> blocks_;
};

struct QueryTableReport {
    std::string language;
    std::size_t order = 0;
    std::size_t probe_depth = 0;
    std::uint64_t distinct_rows = 0; // QTlow
    std::uint64_t distinct_cols = 0; // LQlow
    std::uint64_t query_count = 0;
    double elapsed_ms = 0.0;
    // Row profiles in length-lex row order, present when requested.
    std::optional<std::vector<Profile>> profiles;
};

struct QueryTableOptions {
    std::size_t parallelism = 1;
    bool keep_profiles = false;
    std::uint64_t budget = std::uint64_t{1} << 28;
};

// Throws budget_error when |A^{<=n}| * |A^{<=m}| exceeds the budget.
QueryTableReport query_table(const LanguageOracle& oracle, std::size_t order, std::size_t probe_depth,
                             const QueryTableOptions& options = {});

// Row of w against the columns u in A^{<=order}.
Profile profile_of(const LanguageOracle& oracle, std::size_t order, const Word& w);

// Row of w against an explicit list of columns.
Profile profile_over(const LanguageOracle& oracle, const std::vector<Word>& columns, const Word& w);

// Length-lex least w with |w| <= max_len and L(uw) != L(vw).
std::optional<Word> separating_word(const LanguageOracle& oracle, const Word& u, const Word& v,
                                    std::size_t max_len);

// #rev(u_1)#...#rev(u_k) over S in length-lex order; "#" for empty S.
// For u of the common length: u.w in reverse_membership iff u in S.
Word witness_reverse_membership(const std::set<Word>& words);

struct HierarchyWitness {
    Word padding; // *^{2^{n/l}}
    Word suffix;  // #u_1#...#u_k

    // Column word padding.u for a test site u.
    Word site(const Word& u) const { return concat(padding, u); }
};

// Requires n divisible by l and all words in S of length n.
HierarchyWitness witness_hierarchy(std::size_t l, std::size_t n, const std::set<Word>& words);

// QTlow <= 2^{s_n}: a machine with s_n states at order n generates a lattice
// with at most 2^{s_n} profiles.
bool check_alt_bound(const QueryTableReport& report, std::uint64_t s_n);

// Lower-bound demonstrations: one witness per subset S of {0,1}^n and the
// number of pairwise distinct profiles they induce.
struct WitnessDemoReport {
    std::string language;
    std::size_t n = 0;
    std::size_t order = 0;
    std::uint64_t witnesses = 0;
    std::uint64_t distinct_profiles = 0;
    // Postcondition u.w in L <=> u in S violated for some (S, u).
    std::uint64_t postcondition_failures = 0;
    std::uint64_t columns = 0;
    // False when profiles were restricted to the 2^n test-site columns; a
    // distinct restriction still implies distinct full rows.
    bool full_profiles = true;
    double elapsed_ms = 0.0;
};

WitnessDemoReport demo_expalt(std::size_t n);
WitnessDemoReport demo_hierarchy(std::size_t l, std::size_t n);

} // namespace osc
