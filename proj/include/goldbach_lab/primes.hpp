#pragma once

// Prime generation and exact primality over 64-bit naturals.
//
// The prime-producing function used throughout the project is the segmented
// sieve (for intervals) plus deterministic Miller-Rabin (for single values).
// nth_prime() fixes one concrete enumeration, f(x) = x-th prime.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "goldbach_lab/error.hpp"

namespace goldbach_lab {

inline constexpr std::size_t kDefaultSegmentCap = std::size_t{1} << 26;
inline constexpr std::uint64_t kDefaultNthPrimeLimit = std::uint64_t{1} << 36;

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

inline std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && (r > 0xFFFFFFFFull || r * r > n)) --r;
    while (r < 0xFFFFFFFFull && (r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Plain sieve of Eratosthenes, primes <= limit.
inline std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
    std::vector<std::uint32_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

inline constexpr std::uint32_t kSmallPrimeLimit = 1u << 16;

// Immutable after first construction; thread-safe static init.
inline const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> table = primes_up_to(kSmallPrimeLimit);
    return table;
}

}  // namespace detail

/// Exact primality for every 64-bit input: Miller-Rabin over the first twelve prime bases.
inline bool is_prime(std::uint64_t n) {
    constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (auto p : bases) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 41 * 41) return true;

    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : bases) {
        std::uint64_t x = detail::pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

/// Primality table for the closed interval [lo, hi]. Only odd numbers are
/// stored; 2 is answered arithmetically.
class PrimeSegment {
public:
    std::uint64_t lo() const noexcept { return lo_; }
    std::uint64_t hi() const noexcept { return hi_; }
    std::uint64_t size() const noexcept { return hi_ - lo_ + 1; }

    /// Flag at offset k, i.e. whether lo + k is prime.
    bool test(std::uint64_t k) const noexcept { return is_prime_in_range(lo_ + k); }

    bool contains(std::uint64_t n) const noexcept { return n >= lo_ && n <= hi_; }

    /// Precondition: contains(n).
    bool is_prime_in_range(std::uint64_t n) const noexcept {
        if (n == 2) return true;
        if ((n & 1) == 0) return false;
        const std::uint64_t idx = (n - first_odd_) >> 1;
        return (bits_[idx >> 6] >> (idx & 63)) & 1;
    }

    std::uint64_t count() const noexcept {
        std::uint64_t total = (lo_ <= 2 && hi_ >= 2) ? 1 : 0;
        for (auto w : bits_) total += static_cast<std::uint64_t>(std::popcount(w));
        return total;
    }

    /// Count of primes in [a, b], where [a, b] lies inside the segment.
    std::uint64_t count(std::uint64_t a, std::uint64_t b) const noexcept {
        if (a > b) return 0;
        std::uint64_t total = (a <= 2 && b >= 2) ? 1 : 0;
        std::uint64_t oa = a | 1;
        if (oa < first_odd_) oa = first_odd_;
        const std::uint64_t ob = (b & 1) ? b : b - 1;
        if (b == 0 || oa > ob || odd_count_ == 0) return total;
        const std::uint64_t i0 = (oa - first_odd_) >> 1;
        const std::uint64_t i1 = (ob - first_odd_) >> 1;
        const std::uint64_t w0 = i0 >> 6, w1 = i1 >> 6;
        for (std::uint64_t w = w0; w <= w1; ++w) {
            std::uint64_t word = bits_[w];
            if (w == w0) word &= ~std::uint64_t{0} << (i0 & 63);
            if (w == w1 && (i1 & 63) != 63) word &= (std::uint64_t{1} << ((i1 & 63) + 1)) - 1;
            total += static_cast<std::uint64_t>(std::popcount(word));
        }
        return total;
    }

    template <class Fn>
    void for_each_prime(Fn&& fn) const {
        if (lo_ <= 2 && hi_ >= 2) fn(std::uint64_t{2});
        for (std::size_t w = 0; w < bits_.size(); ++w) {
            std::uint64_t word = bits_[w];
            while (word) {
                const int b = std::countr_zero(word);
                word &= word - 1;
                fn(first_odd_ + 2 * (static_cast<std::uint64_t>(w) * 64 + static_cast<std::uint64_t>(b)));
            }
        }
    }

    std::vector<std::uint64_t> primes() const {
        std::vector<std::uint64_t> out;
        for_each_prime([&](std::uint64_t p) { out.push_back(p); });
        return out;
    }

private:
    friend PrimeSegment sieve_segment(std::uint64_t lo, std::uint64_t hi, std::size_t cap);

    std::uint64_t lo_ = 1;
    std::uint64_t hi_ = 1;
    std::uint64_t first_odd_ = 1;
    std::uint64_t odd_count_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Segmented sieve of Eratosthenes over [lo, hi] with odd-only storage.
inline PrimeSegment sieve_segment(std::uint64_t lo, std::uint64_t hi, std::size_t cap = kDefaultSegmentCap) {
    if (lo == 0 || lo > hi) {
        throw Error(Errc::InvalidInterval,
                    "sieve interval [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    if (hi - lo >= cap) {
        throw Error(Errc::SegmentTooLarge, "span " + std::to_string(hi - lo) + " + 1 exceeds cap " +
                                               std::to_string(cap));
    }

    PrimeSegment seg;
    seg.lo_ = lo;
    seg.hi_ = hi;
    seg.first_odd_ = lo | 1;
    seg.odd_count_ = seg.first_odd_ > hi ? 0 : (hi - seg.first_odd_) / 2 + 1;
    seg.bits_.assign((seg.odd_count_ + 63) / 64, ~std::uint64_t{0});
    if (seg.odd_count_ % 64 != 0) {
        seg.bits_.back() = (std::uint64_t{1} << (seg.odd_count_ % 64)) - 1;
    }
    auto clear = [&](std::uint64_t idx) { seg.bits_[idx >> 6] &= ~(std::uint64_t{1} << (idx & 63)); };

    if (seg.first_odd_ == 1 && seg.odd_count_ > 0) clear(0);

    const std::uint64_t root = detail::isqrt(hi);
    std::vector<std::uint32_t> local;
    const std::vector<std::uint32_t>* base = &detail::small_primes();
    if (root > detail::kSmallPrimeLimit) {
        local = detail::primes_up_to(static_cast<std::uint32_t>(root));
        base = &local;
    }

    for (std::uint64_t p : *base) {
        if (p == 2) continue;
        if (p > root) break;
        // First odd multiple of p that is >= max(p*p, first_odd).
        std::uint64_t start = p * p;
        if (start < seg.first_odd_) {
            start = seg.first_odd_ / p * p;
            if (start < seg.first_odd_) {
                if (hi - start < p) continue;
                start += p;
            }
            if ((start & 1) == 0) {
                if (hi - start < p) continue;
                start += p;
            }
        }
        if (start > hi) continue;
        for (std::uint64_t idx = (start - seg.first_odd_) >> 1; idx < seg.odd_count_; idx += p) clear(idx);
    }
    return seg;
}

/// Number of primes in [lo, hi]; sieves in cap-sized chunks.
inline std::uint64_t prime_count(std::uint64_t lo, std::uint64_t hi, std::size_t cap = kDefaultSegmentCap) {
    if (lo == 0 || lo > hi) {
        throw Error(Errc::InvalidInterval,
                    "count interval [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    std::uint64_t total = 0;
    std::uint64_t a = lo;
    for (;;) {
        const std::uint64_t b = (hi - a >= cap - 1) ? a + (cap - 1) : hi;
        total += sieve_segment(a, b, cap).count();
        if (b == hi) break;
        a = b + 1;
    }
    return total;
}

/// Visits primes 2, 3, 5, ... up to and including limit, in increasing order,
/// until fn returns false.
template <class Fn>
void for_each_prime_up_to(std::uint64_t limit, Fn&& fn) {
    for (std::uint64_t p : detail::small_primes()) {
        if (p > limit) return;
        if (!fn(p)) return;
    }
    constexpr std::uint64_t chunk = std::uint64_t{1} << 18;
    std::uint64_t a = detail::kSmallPrimeLimit + 1;
    while (a <= limit) {
        const std::uint64_t b = (limit - a >= chunk - 1) ? a + chunk - 1 : limit;
        bool keep_going = true;
        const auto seg = sieve_segment(a, b, chunk);
        seg.for_each_prime([&](std::uint64_t p) {
            if (keep_going && !fn(p)) keep_going = false;
        });
        if (!keep_going || b == limit) return;
        a = b + 1;
    }
}

/// f(x) = x-th prime (1-based). Throws OutOfBounds when the guaranteed upper
/// bound for the answer exceeds `limit`.
inline std::uint64_t nth_prime(std::uint64_t x, std::uint64_t limit = kDefaultNthPrimeLimit) {
    if (x == 0) throw Error(Errc::InvalidArgument, "prime index starts at 1");
    // Rosser's bound p_x < x (ln x + ln ln x) holds for x >= 6.
    double bound = 13.0;
    if (x >= 6) {
        const double lx = std::log(static_cast<double>(x));
        bound = static_cast<double>(x) * (lx + std::log(lx)) + 1.0;
    }
    if (bound > static_cast<double>(limit)) {
        throw Error(Errc::OutOfBounds,
                    "prime #" + std::to_string(x) + " exceeds supported magnitude " + std::to_string(limit));
    }
    std::uint64_t seen = 0;
    std::uint64_t answer = 0;
    for_each_prime_up_to(static_cast<std::uint64_t>(bound), [&](std::uint64_t p) {
        if (++seen == x) {
            answer = p;
            return false;
        }
        return true;
    });
    return answer;
}

}  // namespace goldbach_lab
