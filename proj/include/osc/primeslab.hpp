#pragma once

// Number theory behind the prime-language experiments: LSB-first binary
// encoding, exact 64-bit primality, isolated primes in arithmetic
// progressions, and prime constellation search.

#include "osc/alphabet.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>

namespace osc::primes {

inline constexpr std::size_t max_word_length = 63;

// sum_i w(i) 2^i over {0,1}; at most 63 letters.
std::uint64_t bin(const Word& w);

// Word of exactly `width` letters with bin(result) = x.
Word encode(std::uint64_t x, std::size_t width);

// Shortest word encoding x (empty for 0).
Word encode(std::uint64_t x);

// Deterministic Miller-Rabin, exact on the whole 64-bit range.
bool is_prime(std::uint64_t x);

struct IsolatedPrimeResult {
    std::uint64_t k = 0;
    std::uint64_t p = 0;
    std::uint64_t radius = 0;
    std::int64_t window_lo = 0;
    std::int64_t window_hi = 0;
};

// Least k <= search_bound such that p = a + b*k is the only prime in
// [p - radius, p + radius].
std::optional<IsolatedPrimeResult> find_isolated_prime(std::uint64_t a, std::uint64_t b,
                                                       std::uint64_t radius,
                                                       std::uint64_t search_bound);

// Independent window rescan of a result.
bool verify_isolated_prime(const IsolatedPrimeResult& r, std::uint64_t a, std::uint64_t b);

struct ProfileWitness {
    Word w;
    IsolatedPrimeResult prime;
};

// For odd u (u(0) = 1) of length n <= 20: w such that, among odd v of length n,
// bin(v.w) is prime exactly for v = u.
std::optional<ProfileWitness> prime_profile_witness(const Word& u, std::uint64_t search_bound);

// Smallest prime dividing prod_{a in S} (b*k + a) for every k, if any.
std::optional<std::uint64_t> covering_prime(const std::set<std::uint64_t>& residues, std::uint64_t b);

// No prime divides the product for every k.
bool check_divisibility_condition(const std::set<std::uint64_t>& residues, std::uint64_t b);

// Least k <= search_bound such that, for every odd a < 2^n, 2^n k + a is prime
// iff a is in S.
std::optional<std::uint64_t> constellation_search(std::size_t n, const std::set<std::uint64_t>& residues,
                                                  std::uint64_t search_bound);

} // namespace osc::primes
