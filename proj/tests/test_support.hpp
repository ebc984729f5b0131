#pragma once

// Independent oracles used by the tests. Nothing here calls into the library.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace test_support {

inline bool trial_division_is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> trial_division_primes(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo; n <= hi; ++n) {
        if (trial_division_is_prime(n)) out.push_back(n);
    }
    return out;
}

inline std::pair<std::uint64_t, std::uint64_t> enumerate_parity(std::uint64_t a, std::uint64_t b) {
    std::uint64_t even = 0, odd = 0;
    for (std::uint64_t x = a; x <= b; ++x) (x % 2 ? odd : even) += 1;
    return {even, odd};
}

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> brute_force_pairs(std::uint64_t a) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t p = 2; p <= a / 2; ++p) {
        if (trial_division_is_prime(p) && trial_division_is_prime(a - p)) out.emplace_back(p, a - p);
    }
    return out;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(0x5eed'601db'ac4ull);
    return engine;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

}  // namespace test_support
