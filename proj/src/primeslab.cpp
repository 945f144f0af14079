#include "osc/primeslab.hpp"

#include "osc/errors.hpp"

#include <algorithm>
#include <numeric>

namespace osc::primes {

namespace {

constexpr std::uint64_t max_value = std::uint64_t{1} << 63;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1u)
            r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t base, std::uint64_t d, unsigned s) {
    std::uint64_t x = pow_mod(base, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

bool only_prime_in_window(std::uint64_t p, std::uint64_t radius) {
    const std::uint64_t lo = p > radius ? p - radius : 0;
    for (std::uint64_t x = lo; x <= p + radius; ++x)
        if (x != p && is_prime(x))
            return false;
    return true;
}

} // namespace

std::uint64_t bin(const Word& w) {
    if (w.size() > max_word_length)
        throw capacity_error("bin: word of length " + std::to_string(w.size()) + " exceeds 63 letters");
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].id > 1)
            throw input_error("bin: word is not over {0,1}");
        x |= static_cast<std::uint64_t>(w[i].id) << i;
    }
    return x;
}

Word encode(std::uint64_t x, std::size_t width) {
    if (width > max_word_length)
        throw capacity_error("encode: width above 63");
    if (width < 64 && (x >> width) != 0)
        throw input_error("encode: " + std::to_string(x) + " does not fit in " + std::to_string(width) + " bits");
    Word w(width);
    for (std::size_t i = 0; i < width; ++i)
        w[i] = Letter{static_cast<std::uint8_t>((x >> i) & 1u)};
    return w;
}

Word encode(std::uint64_t x) {
    std::size_t width = 0;
    while (width < 64 && (x >> width) != 0)
        ++width;
    return encode(x, width);
}

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto p : small) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1u) == 0) {
        d >>= 1;
        ++s;
    }
    // The first twelve primes as bases are exact for n < 3.3e24.
    for (auto base : small)
        if (!strong_probable_prime(n, base, d, s))
            return false;
    return true;
}

std::optional<IsolatedPrimeResult> find_isolated_prime(std::uint64_t a, std::uint64_t b, std::uint64_t radius,
                                                       std::uint64_t search_bound) {
    if (b < 1)
        throw input_error("find_isolated_prime: modulus must be at least 1");
    if (radius < 1)
        throw input_error("find_isolated_prime: radius must be at least 1");
    if (std::gcd(a, b) != 1)
        throw input_error("find_isolated_prime: residue " + std::to_string(a) + " and modulus " +
                          std::to_string(b) + " are not coprime");
    for (std::uint64_t k = 0; k <= search_bound; ++k) {
        const std::uint64_t p = a + checked_mul(b, k);
        if (p < a || p >= max_value || p + radius >= max_value)
            throw capacity_error("find_isolated_prime: candidate exceeds 63 bits");
        if (!is_prime(p) || !only_prime_in_window(p, radius))
            continue;
        return IsolatedPrimeResult{k, p, radius, static_cast<std::int64_t>(p) - static_cast<std::int64_t>(radius),
                                   static_cast<std::int64_t>(p + radius)};
    }
    return std::nullopt;
}

bool verify_isolated_prime(const IsolatedPrimeResult& r, std::uint64_t a, std::uint64_t b) {
    if (r.p != a + b * r.k || r.p % b != a % b || !is_prime(r.p))
        return false;
    if (r.window_lo != static_cast<std::int64_t>(r.p) - static_cast<std::int64_t>(r.radius) ||
        r.window_hi != static_cast<std::int64_t>(r.p + r.radius))
        return false;
    std::size_t primes_seen = 0;
    for (std::int64_t x = std::max<std::int64_t>(r.window_lo, 0); x <= r.window_hi; ++x)
        primes_seen += is_prime(static_cast<std::uint64_t>(x)) ? 1 : 0;
    return primes_seen == 1;
}

std::optional<ProfileWitness> prime_profile_witness(const Word& u, std::uint64_t search_bound) {
    const std::size_t n = u.size();
    if (n == 0 || n > 20)
        throw contract_error("prime_profile_witness: |u| must be in [1, 20]");
    if (u[0].id != 1)
        throw contract_error("prime_profile_witness: u must start with 1 (odd)");
    const std::uint64_t a = bin(u);
    const std::uint64_t modulus = std::uint64_t{1} << n;
    auto found = find_isolated_prime(a, modulus, modulus, search_bound);
    if (!found)
        return std::nullopt;
    ProfileWitness witness{encode(found->k), *found};
    for (std::uint64_t v = 1; v < modulus; v += 2) {
        const bool prime = is_prime(bin(concat(encode(v, n), witness.w)));
        if (prime != (v == a))
            throw std::logic_error("prime_profile_witness: postcondition violated");
    }
    return witness;
}

std::optional<std::uint64_t> covering_prime(const std::set<std::uint64_t>& residues, std::uint64_t b) {
    if (b < 1)
        throw input_error("modulus must be at least 1");
    if (residues.empty())
        return std::nullopt;
    // A prime p not dividing b hits exactly one class of k per residue, so it
    // can only cover when p <= |S|. A prime dividing b covers iff it divides
    // some residue.
    std::set<std::uint64_t> candidates;
    for (std::uint64_t p = 2; p <= residues.size(); ++p)
        if (is_prime(p))
            candidates.insert(p);
    std::uint64_t rest = b;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0)
            continue;
        candidates.insert(p);
        while (rest % p == 0)
            rest /= p;
    }
    if (rest > 1)
        candidates.insert(rest);
    for (std::uint64_t p : candidates) {
        bool covers = true;
        for (std::uint64_t k = 0; k < p && covers; ++k)
            covers = std::any_of(residues.begin(), residues.end(),
                                 [&](std::uint64_t a) { return (mul_mod(b % p, k, p) + a % p) % p == 0; });
        if (covers)
            return p;
    }
    return std::nullopt;
}

bool check_divisibility_condition(const std::set<std::uint64_t>& residues, std::uint64_t b) {
    return !covering_prime(residues, b).has_value();
}

std::optional<std::uint64_t> constellation_search(std::size_t n, const std::set<std::uint64_t>& residues,
                                                  std::uint64_t search_bound) {
    if (n < 1 || n > 20)
        throw input_error("constellation_search: n must be in [1, 20]");
    const std::uint64_t modulus = std::uint64_t{1} << n;
    for (auto a : residues)
        if (a % 2 == 0 || a >= modulus)
            throw input_error("constellation_search: residue " + std::to_string(a) + " is not odd below 2^" +
                              std::to_string(n));
    if (auto p = covering_prime(residues, modulus))
        throw input_error("constellation_search: divisibility condition fails, prime " + std::to_string(*p) +
                          " divides the product for every k");
    for (std::uint64_t k = 0; k <= search_bound; ++k) {
        const std::uint64_t base = checked_mul(modulus, k);
        if (base >= max_value - modulus)
            throw capacity_error("constellation_search: candidate exceeds 63 bits");
        bool match = true;
        for (std::uint64_t a = 1; a < modulus && match; a += 2)
            match = is_prime(base + a) == (residues.count(a) > 0);
        if (match)
            return k;
    }
    return std::nullopt;
}

} // namespace osc::primes
